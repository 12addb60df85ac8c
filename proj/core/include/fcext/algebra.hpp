#ifndef FCEXT_ALGEBRA_HPP
#define FCEXT_ALGEBRA_HPP

#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "fcext/fc_order.hpp"
#include "fcext/milnor.hpp"

namespace fcext {

/* Arithmetic context for the truncated Steenrod algebra A_{<=n}: the
 * exterior generator table, basis conversions between the Milnor basis and
 * the lifted square-free basis, and memoized monomial products.
 *
 * All values are immutable once returned; the memo tables are pure function
 * caches and safe to share across threads. */
class Algebra {
public:
    explicit Algebra(int trunc);

    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    int trunc() const { return trunc_.n; }
    TruncationBound trunc_bound() const { return trunc_; }
    const GenTable& gens() const { return table_; }

    Mono mono(uint64_t bits) const { return mono_from_bits(table_, bits); }

    /* P(R) <-> square-free monomial over the 2-adic bits of R. */
    MilnorBasisElt mono_to_basis(const Mono& m) const;
    Mono basis_to_mono(const MilnorBasisElt& p) const;

    /* Ordered product of the lifted generators of m, ascending rank.
     * Its unique minimal-weight term is P(R) with the bit set of m. */
    const MilnorElt& lift_mono(const Mono& m) const;

    /* Basis conversions; mutually inverse. */
    AlgElt to_pst(const MilnorElt& x) const;
    MilnorElt to_milnor(const AlgElt& a) const;

    /* Projection to gr(A): the sum of minimal-weight terms as an exterior
     * polynomial.  pr(0) = 0. */
    GrPolynomial pr(const MilnorElt& x) const;

    /* Product of two lifted basis monomials, memoized. */
    const AlgElt& mul_mono_mono(const Mono& a, const Mono& b) const;

    AlgElt mul(const Mono& q, const AlgElt& a) const;
    FreeElt mul(const Mono& q, const FreeElt& x) const;
    AlgElt mul(const AlgElt& a, const AlgElt& b) const;
    FreeElt mul(const AlgElt& a, const FreeElt& x) const;

    /* Lift of (P^i_j)^2 for the step-(1) pairs with exponent two. */
    AlgElt gen_square(int rank) const;

    /* Concurrent phases must bracket themselves with set_concurrent(true);
     * outside them the memo tables skip their locks. */
    void set_concurrent(bool on) const { concurrent_ = on; }

private:
    struct PairHash {
        size_t operator()(const std::pair<uint64_t, uint64_t>& k) const
        {
            uint64_t h = k.first * 0x9e3779b97f4a7c15ULL;
            h ^= k.second + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return (size_t)h;
        }
    };

    const MilnorElt& lift_mono_locked(uint64_t bits) const;

    TruncationBound trunc_;
    GenTable table_;
    std::vector<int> rank_lut_;  // (i << 6 | j) -> rank

    mutable bool concurrent_ = false;
    mutable std::shared_mutex lift_mu_;
    mutable std::unordered_map<uint64_t, MilnorElt> lift_memo_;
    mutable std::shared_mutex prod_mu_;
    mutable std::unordered_map<std::pair<uint64_t, uint64_t>, AlgElt, PairHash> prod_memo_;
};

}  // namespace fcext

#endif
