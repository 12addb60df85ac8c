#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fcext/algebra.hpp"
#include "pairing.hpp"

using namespace fcext;

namespace {

Algebra alg(40);

Mono mono_ij(std::initializer_list<std::pair<int, int>> factors)
{
    uint64_t bits = 0;
    for (auto [i, j] : factors) {
        int r = alg.gens().rank_of(i, j);
        REQUIRE(r >= 0);
        bits |= uint64_t(1) << r;
    }
    return alg.mono(bits);
}

MilnorElt random_elt(std::mt19937_64& rng, int deg)
{
    auto basis = oracle::milnor_basis(deg);
    MilnorElt x;
    for (const auto& m : basis)
        if (rng() & 1)
            x = add(x, MilnorElt::single(m));
    return x;
}

}  // namespace

TEST_CASE("generator lifts")
{
    CHECK(alg.lift_mono(Mono{}) == MilnorElt::unit());
    CHECK(alg.lift_mono(mono_ij({{0, 1}})) == MilnorElt::single(MilnorBasisElt::pst(0, 1)));
    // P~(0,1) P~(0,2) = P(1,1) on the nose
    CHECK(alg.lift_mono(mono_ij({{0, 1}, {0, 2}})) == MilnorElt::single(MilnorBasisElt{{1, 1}}));
}

TEST_CASE("projection to the associated graded algebra")
{
    CHECK(alg.pr(MilnorElt::zero()).is_zero());
    CHECK(alg.pr(MilnorElt::single(MilnorBasisElt{{1}})) == GrPolynomial{{mono_ij({{0, 1}})}});
    CHECK(alg.pr(MilnorElt::single(MilnorBasisElt{{1, 1}})) == GrPolynomial{{mono_ij({{0, 1}, {0, 2}})}});
    // only the minimal-weight part survives: w(P(1)) = 1, w(P(0,1)) = 3
    MilnorElt mixed = add(MilnorElt::single(MilnorBasisElt{{1}}), MilnorElt::single(MilnorBasisElt{{0, 1}}));
    CHECK(alg.pr(mixed) == GrPolynomial{{mono_ij({{0, 1}})}});
}

TEST_CASE("basis conversion round trip")
{
    CHECK(alg.to_pst(MilnorElt::zero()).is_zero());
    CHECK(alg.to_milnor(AlgElt{}).is_zero());
    CHECK(alg.to_pst(MilnorElt::single(MilnorBasisElt{{1}})) == AlgElt{{mono_ij({{0, 1}})}});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int deg = (int)(rng() % 31);
        MilnorElt x = random_elt(rng, deg);
        CHECK(alg.to_milnor(alg.to_pst(x)) == x);
    }
}

TEST_CASE("pst conversion processes weights from below")
{
    // x = P(1,1) has weight 4; its pst form is the single monomial P^0_1 P^0_2
    AlgElt a = alg.to_pst(MilnorElt::single(MilnorBasisElt{{1, 1}}));
    CHECK(a == AlgElt{{mono_ij({{0, 1}, {0, 2}})}});
    // Sq2 Sq1 = P(3) + P(0,1): weights 2 and 3
    MilnorElt p = milnor_product_elt(MilnorElt::single(MilnorBasisElt::sq(2)),
                                     MilnorElt::single(MilnorBasisElt::sq(1)), alg.trunc_bound());
    AlgElt conv = alg.to_pst(p);
    CHECK(alg.to_milnor(conv) == p);
    CHECK(leading(conv).fdeg == 2);
}

TEST_CASE("squares of generators vanish in gr")
{
    for (int rank = 0; rank < alg.gens().size(); ++rank) {
        const Generator& g = alg.gens()[rank];
        if (2 * g.deg > alg.trunc())
            continue;
        AlgElt sq = alg.gen_square(rank);
        for (const Mono& t : sq.terms)
            CHECK(t.fdeg > 2 * g.fdeg);
    }
}

TEST_CASE("monomial products and the leading-monomial corollary")
{
    std::mt19937_64 rng(17);
    int square_free_cases = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        uint64_t mask = (uint64_t(1) << alg.gens().size()) - 1;
        Mono q = alg.mono(rng() & rng() & rng() & mask);
        Mono m = alg.mono(rng() & rng() & rng() & mask);
        if (q.deg + m.deg > alg.trunc())
            continue;
        const AlgElt& prod = alg.mul_mono_mono(q, m);
        if ((q.bits & m.bits) == 0) {
            Mono qm = alg.mono(q.bits | m.bits);
            REQUIRE(!prod.is_zero());
            CHECK(leading(prod) == qm);
            ++square_free_cases;
        }
        else if (!prod.is_zero()) {
            // qm is not square-free: the projections multiply to zero, so the
            // filtration strictly drops and the lead sits below qm
            CHECK(leading(prod).fdeg > q.fdeg + m.fdeg);
            CHECK(leading(prod).deg == q.deg + m.deg);
        }
    }
    CHECK(square_free_cases > 20);
}

TEST_CASE("product of elements matches milnor arithmetic")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        MilnorElt x = random_elt(rng, (int)(rng() % 13));
        MilnorElt y = random_elt(rng, (int)(rng() % 13));
        AlgElt a = alg.to_pst(x), b = alg.to_pst(y);
        AlgElt ab = alg.mul(a, b);
        CHECK(alg.to_milnor(ab) == milnor_product_elt(x, y, alg.trunc_bound()));
    }
}
