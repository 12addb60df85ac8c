#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fcext/fc_order.hpp"

using namespace fcext;

namespace {

const GenTable table(60);

Mono mono_ij(std::initializer_list<std::pair<int, int>> factors)
{
    uint64_t bits = 0;
    for (auto [i, j] : factors) {
        int r = table.rank_of(i, j);
        REQUIRE(r >= 0);
        bits |= uint64_t(1) << r;
    }
    return mono_from_bits(table, bits);
}

Mono random_mono(std::mt19937_64& rng, int fdeg_cap)
{
    for (;;) {
        uint64_t bits = rng() & rng() & ((uint64_t(1) << table.size()) - 1);
        Mono m = mono_from_bits(table, bits);
        if (m.fdeg <= fdeg_cap)
            return m;
        // drop random factors until the cap holds
        while (m.fdeg > fdeg_cap && m.bits) {
            uint64_t b = m.bits;
            int n = rng() % std::popcount(b);
            for (int k = 0; k < n; ++k)
                b &= b - 1;
            m = mono_from_bits(table, m.bits & ~(b & (~b + 1)));
        }
        return m;
    }
}

}  // namespace

TEST_CASE("generator table closed forms")
{
    const Generator& p01 = table[table.rank_of(0, 1)];
    CHECK(p01.deg == 1);
    CHECK(p01.fdeg == 1);
    const Generator& p11 = table[table.rank_of(1, 1)];
    CHECK(p11.deg == 2);
    CHECK(p11.fdeg == 1);
    const Generator& p02 = table[table.rank_of(0, 2)];
    CHECK(p02.deg == 3);
    CHECK(p02.fdeg == 3);
    // ascending degree, all distinct
    for (int r = 1; r < table.size(); ++r)
        CHECK(table[r - 1].deg < table[r].deg);
}

TEST_CASE("ordering examples")
{
    Mono a = mono_ij({{0, 1}});
    Mono ab = mono_ij({{0, 1}, {0, 2}});
    CHECK(cmp(a, a) == std::strong_ordering::equal);
    // higher filtration degree is smaller
    CHECK(ab < a);
    // equal fdeg, the lex-greater one is smaller
    Mono p01 = mono_ij({{0, 1}});
    Mono p11 = mono_ij({{1, 1}});
    CHECK(p01 < p11);
}

TEST_CASE("module monomial ordering")
{
    Mono m = mono_ij({{0, 1}});
    Mono m2 = mono_ij({{1, 1}, {0, 2}});
    ModMono a{m, 1};   // e_2
    ModMono b{m2, 0};  // e_1
    CHECK(a < b);      // lower slot index is larger
    CHECK(cmp(ModMono{m, 0}, ModMono{m2, 0}) == cmp(m, m2));
    CHECK(cmp(a, a) == std::strong_ordering::equal);
}

TEST_CASE("divisibility, lcm and quotient")
{
    Mono m = mono_ij({{0, 1}, {0, 2}});
    Mono d = mono_ij({{0, 1}});
    CHECK(divides(d, m));
    CHECK(!divides(m, d));
    CHECK(lcm(table, m, m) == m);
    CHECK(quotient(m, d) == mono_ij({{0, 2}}));
    CHECK_THROWS(quotient(d, m));
    Mono out;
    CHECK(!mono_mul_squarefree(table, m, d, out));
    CHECK(mono_mul_squarefree(table, d, mono_ij({{0, 2}}), out));
    CHECK(out == m);
}

TEST_CASE("degree-reversed admissible ordering axioms")
{
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        Mono m = random_mono(rng, 25);
        Mono n = random_mono(rng, 25);
        Mono l = random_mono(rng, 25);
        // axiom (3)
        if (m.fdeg > n.fdeg)
            CHECK(m < n);
        // axiom (1), on square-free products
        Mono ml, nl;
        if (mono_mul_squarefree(table, m, l, ml) && mono_mul_squarefree(table, n, l, nl)) {
            CHECK((cmp(m, n) == cmp(ml, nl)));
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("leading term and projection of elements")
{
    Mono big = mono_ij({{1, 1}});
    Mono small = mono_ij({{0, 1}, {0, 2}});
    AlgElt x{{big, small}};
    REQUIRE(big > small);
    CHECK(leading(x) == big);
    GrPolynomial g = pr_elt(x);
    CHECK(g.terms == std::vector<Mono>{big});  // fdeg 1 beats fdeg 4
    CHECK_THROWS(leading(AlgElt{}));
    CHECK(pr_elt(AlgElt{}).is_zero());
}

TEST_CASE("addition cancels mod 2 and keeps descending order")
{
    Mono a = mono_ij({{0, 1}});
    Mono b = mono_ij({{1, 1}});
    AlgElt x{{b, a}};
    AlgElt y{{a}};
    AlgElt s = add(x, y);
    CHECK(s == AlgElt{{b}});
    CHECK(add(s, s).is_zero());
}

TEST_CASE("monomial enumeration by degree")
{
    // degree 3: P(0,2) and P(1,1) P(0,1)
    auto ms = monomials_of_degree(table, 3);
    CHECK(ms.size() == 2);
    auto ms0 = monomials_of_degree(table, 0);
    REQUIRE(ms0.size() == 1);
    CHECK(ms0[0].is_unit());
    for (const Mono& m : monomials_of_degree(table, 9))
        CHECK(m.deg == 9);
}

TEST_CASE("monomial text form")
{
    CHECK(to_string(table, Mono{}) == "1");
    CHECK(to_string(table, mono_ij({{0, 1}, {0, 2}})) == "P(0,1)*P(0,2)");
    CHECK(to_string(table, ModMono{mono_ij({{0, 1}}), 0}) == "P(0,1)*e1");
    CHECK(to_string(table, ModMono{Mono{}, 2}) == "e3");
}
