#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bruteres.hpp"
#include "fcext/chart_io.hpp"
#include "fcext/resolution.hpp"

using namespace fcext;

namespace {

MilnorElt sq(uint32_t n)
{
    return MilnorElt::single(MilnorBasisElt::sq(n));
}

/* F_2 = A / A(Sq1, Sq2, Sq4, ...) */
ModulePresentation sphere(const Algebra& alg, int t_max)
{
    ModulePresentation p;
    p.gen_degrees = {0};
    for (uint32_t n = 1; (int)n <= t_max; n *= 2) {
        AlgElt a = alg.to_pst(sq(n));
        std::vector<ModMono> terms;
        for (const Mono& m : a.terms)
            terms.push_back(ModMono{m, 0});
        sort_terms(terms);
        p.relations.push_back(FreeElt{std::move(terms)});
    }
    return p;
}

std::vector<oracle::BruteElt> sphere_relations(int t_max)
{
    std::vector<oracle::BruteElt> rels;
    for (uint32_t n = 1; (int)n <= t_max; n *= 2)
        rels.push_back({sq(n)});
    return rels;
}

std::shared_ptr<Resolution> resolve_sphere(int t_max, int s_max, int threads = 1)
{
    auto alg = std::make_shared<Algebra>(t_max);
    ResolveOptions opt;
    opt.s_max = s_max;
    opt.gb.threads = threads;
    auto res = std::make_shared<Resolution>(alg, minimize_presentation(*alg, sphere(*alg, t_max)), opt);
    res->extend(t_max);
    return res;
}

std::map<std::pair<int, int>, int> chart_ranks(const Resolution& res)
{
    std::map<std::pair<int, int>, int> ranks;
    for (const ChartEntry& e : res.chart())
        ranks[{e.s, e.t}] += 1;
    return ranks;
}

}  // namespace

TEST_CASE("sphere through t = 4: h_0, h_1, h_2 and h_0^2")
{
    auto res = resolve_sphere(4, 4);
    auto ranks = chart_ranks(*res);
    CHECK(ranks[{0, 0}] == 1);
    CHECK(ranks[{1, 1}] == 1);
    CHECK(ranks[{1, 2}] == 1);
    CHECK(ranks[{1, 4}] == 1);
    CHECK(ranks[{1, 3}] == 0);
    CHECK(ranks[{2, 2}] == 1);  // h_0^2
    res->verify_complex();
    res->verify_minimality();
}

TEST_CASE("chart ranks match the brute-force minimal resolution up to t = 10")
{
    const int T = 10;
    auto res = resolve_sphere(T, T);
    auto ranks = chart_ranks(*res);
    oracle::BruteResolution brute({0}, sphere_relations(T), T, T);
    for (int t = 0; t <= T; ++t)
        for (int s = 0; s <= T; ++s)
            CHECK(ranks[{s, t}] == brute.rank(s, t));
    // nothing above the diagonal
    for (auto& [st, n] : ranks)
        if (st.second < st.first)
            CHECK(n == 0);
}

TEST_CASE("extend is idempotent and resumable in memory")
{
    auto alg = std::make_shared<Algebra>(8);
    ResolveOptions opt;
    opt.s_max = 8;
    Resolution fresh(alg, minimize_presentation(*alg, sphere(*alg, 8)), opt);
    fresh.extend(8);
    std::string full = chart_tsv(fresh);

    Resolution stepwise(alg, minimize_presentation(*alg, sphere(*alg, 8)), opt);
    stepwise.extend(5);
    stepwise.extend(8);
    stepwise.extend(8);  // no-op
    CHECK(chart_tsv(stepwise) == full);
}

TEST_CASE("trivial module detection and naming")
{
    auto res = resolve_sphere(8, 8);
    CHECK(res->trivial_module());
    CHECK(res->gen_name(0, 0, 0) == "1");
    CHECK(res->gen_name(1, 1, 0) == "h0");
    CHECK(res->gen_name(1, 2, 0) == "h1");
    CHECK(res->gen_name(1, 4, 0) == "h2");
    CHECK(res->gen_name(1, 8, 0) == "h3");
    CHECK(res->gen_name(2, 2, 0) == "2_2_0");
    auto h1 = res->find_gen("h1");
    REQUIRE(h1.has_value());
    CHECK(h1->t == 2);
    CHECK(res->find_gen("1_2_0").has_value());
    CHECK(!res->find_gen("h9").has_value());
}

TEST_CASE("a nontrivial module: A/ASq1 has no h aliases and matches its oracle")
{
    const int T = 8;
    auto alg = std::make_shared<Algebra>(T);
    ModulePresentation p;
    p.gen_degrees = {0};
    AlgElt a = alg->to_pst(sq(1));
    p.relations.push_back(FreeElt{{ModMono{a.terms[0], 0}}});
    ResolveOptions opt;
    opt.s_max = T;
    Resolution res(alg, minimize_presentation(*alg, p), opt);
    res.extend(T);
    CHECK(!res.trivial_module());
    CHECK(res.gen_name(1, 1, 0) == "1_1_0");
    auto ranks = chart_ranks(res);
    oracle::BruteResolution brute({0}, {{sq(1)}}, T, T);
    for (int t = 0; t <= T; ++t)
        for (int s = 0; s <= T; ++s)
            CHECK(ranks[{s, t}] == brute.rank(s, t));
}

TEST_CASE("chart TSV format")
{
    auto res = resolve_sphere(4, 4);
    std::string tsv = chart_tsv(*res);
    CHECK(tsv.rfind("s\tt\tindex\tname\n", 0) == 0);
    CHECK(tsv.find("0\t0\t0\t1\n") != std::string::npos);
    CHECK(tsv.find("1\t1\t0\th0\n") != std::string::npos);
    CHECK(chart_tsv(*res, 0) == "s\tt\tindex\tname\n0\t0\t0\t1\n");
}

TEST_CASE("chart of a module with no generators in range is header-only")
{
    auto alg = std::make_shared<Algebra>(6);
    ModulePresentation p;
    p.gen_degrees = {3};
    ResolveOptions opt;
    opt.s_max = 2;
    Resolution res(alg, p, opt);
    res.extend(6);
    CHECK(chart_tsv(res, 2) == "s\tt\tindex\tname\n");
}

TEST_CASE("thread count leaves the chart unchanged")
{
    std::string one = chart_tsv(*resolve_sphere(10, 10, 1));
    std::string four = chart_tsv(*resolve_sphere(10, 10, 4));
    CHECK(one == four);
}
