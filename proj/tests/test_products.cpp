#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cobar.hpp"
#include "fcext/chainmap.hpp"

using namespace fcext;

namespace {

MilnorElt sq(uint32_t n)
{
    return MilnorElt::single(MilnorBasisElt::sq(n));
}

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

struct Setup {
    std::shared_ptr<Resolution> res;
    std::shared_ptr<ChainMaps> maps;
};

Setup make(int T)
{
    auto alg = std::make_shared<Algebra>(T);
    ResolveOptions opt;
    opt.s_max = T;
    auto res = std::make_shared<Resolution>(alg, minimize_presentation(*alg, sphere(*alg, T)), opt);
    res->extend(T);
    return {res, std::make_shared<ChainMaps>(*res)};
}

}  // namespace

TEST_CASE("the unit acts as identity")
{
    auto [res, maps] = make(6);
    ChartEntry one{0, 0, 0};
    for (const ChartEntry& g : res->chart()) {
        auto p1 = maps->product(one, g);
        auto p2 = maps->product(g, one);
        CHECK(p1 == std::vector<int>{g.index});
        CHECK(p2 == std::vector<int>{g.index});
    }
}

TEST_CASE("h_0 tower and the h_0 h_1 = 0, h_1 h_2 = 0 relations")
{
    auto [res, maps] = make(8);
    ChartEntry h0{1, 1, 0}, h1{1, 2, 0}, h2{1, 4, 0};
    // h_0 . h_0 lands on the unique class at (2,2)
    CHECK(maps->product(h0, h0) == std::vector<int>{0});
    CHECK(maps->product(h0, h1).empty());
    CHECK(maps->product(h1, h0).empty());
    CHECK(maps->product(h1, h2).empty());
    CHECK(maps->product(h2, h1).empty());
    // h_0 h_2 is nonzero at (2,5)
    CHECK(maps->product(h0, h2) == std::vector<int>{0});
}

TEST_CASE("h_1^3 = h_0^2 h_2")
{
    auto [res, maps] = make(10);
    ChartEntry h0{1, 1, 0}, h1{1, 2, 0}, h2{1, 4, 0};
    auto sq1 = maps->product(h1, h1);  // (2,4)
    REQUIRE(sq1 == std::vector<int>{0});
    ChartEntry h1sq{2, 4, 0};
    auto cube = maps->product(h1sq, h1);  // (3,6)
    auto h0h2 = maps->product(h0, h2);    // (2,5)
    REQUIRE(h0h2 == std::vector<int>{0});
    auto other = maps->product(ChartEntry{2, 5, 0}, h0);  // (3,6)
    REQUIRE(!cube.empty());
    CHECK(cube == other);
}

TEST_CASE("products agree with the cobar oracle through t = 9")
{
    const int T = 9;
    auto [res, maps] = make(T);
    oracle::CobarOracle cobar(T);
    auto chart = res->chart();
    // ranks agree and the range is multiplicity-free
    std::map<std::pair<int, int>, int> ranks;
    for (const ChartEntry& e : chart)
        ranks[{e.s, e.t}] += 1;
    for (int t = 0; t <= T; ++t) {
        for (int s = 0; s <= t; ++s) {
            CHECK(ranks[{s, t}] == cobar.rank(s, t));
            CHECK(cobar.rank(s, t) <= 1);
        }
    }
    for (const ChartEntry& a : chart) {
        for (const ChartEntry& b : chart) {
            if (a.t + b.t > T)
                continue;
            auto ab = maps->product(a, b);
            auto ba = maps->product(b, a);
            CHECK(ab == ba);  // graded-commutative = commutative at p = 2
            CHECK(ab.size() == (cobar.product_nonzero(a.s, a.t, b.s, b.t) ? 1u : 0u));
        }
    }
}

TEST_CASE("chain map cache blobs round-trip")
{
    auto [res, maps] = make(6);
    ChartEntry h0{1, 1, 0}, h1{1, 2, 0};
    maps->product(h0, h1);
    maps->product(h0, h0);
    auto blobs = maps->export_blobs();
    CHECK(!blobs.empty());
    ChainMaps fresh(*res);
    fresh.import_blobs(blobs);
    CHECK(fresh.product(h0, h0) == maps->product(h0, h0));
    auto blobs2 = fresh.export_blobs();
    CHECK(blobs2.size() >= blobs.size());
}
