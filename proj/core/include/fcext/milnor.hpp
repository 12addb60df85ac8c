#ifndef FCEXT_MILNOR_HPP
#define FCEXT_MILNOR_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

namespace fcext {

/* Truncation A_{<=n}: products of total degree above n are zero. */
struct TruncationBound {
    int n = 0;
};

/* Milnor basis element P(R), R = (r_1, r_2, ...), trailing zeros trimmed.
 * P() is the unit. */
struct MilnorBasisElt {
    std::vector<uint32_t> r;

    int degree() const;  // sum r_k (2^k - 1)
    int weight() const;  // sum over 2-adic bits a_{k,i} of r_k of (2k-1)

    void trim();

    static MilnorBasisElt sq(uint32_t n);         // P(n), Sq^n
    static MilnorBasisElt pst(int i, int j);      // P(0,..,2^i,..), entry at position j >= 1

    auto operator<=>(const MilnorBasisElt&) const = default;
};

/* F_2-sum of Milnor basis elements; terms sorted ascending, no duplicates. */
struct MilnorElt {
    std::vector<MilnorBasisElt> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const MilnorElt&) const = default;

    static MilnorElt zero() { return {}; }
    static MilnorElt unit() { return {{MilnorBasisElt{}}}; }
    static MilnorElt single(MilnorBasisElt m) { return {{std::move(m)}}; }
};

MilnorElt add(const MilnorElt& a, const MilnorElt& b);

/* Milnor's product formula: sum over matrices X = (x_{ij}) with
 * r_i = sum_j 2^j x_{ij} and s_j = sum_i x_{ij}; each matrix with all
 * diagonal multinomials odd contributes P(T), t_n = sum_{i+j=n} x_{ij}. */
MilnorElt milnor_product(const MilnorBasisElt& a, const MilnorBasisElt& b, TruncationBound trunc);

MilnorElt milnor_product_elt(const MilnorElt& a, const MilnorElt& b, TruncationBound trunc);

/* Right side of the Adem relation Sq^i Sq^j (0 < i < 2j), evaluated in the
 * Milnor basis.  Test oracle against milnor_product. */
MilnorElt adem_expand(int i, int j);

constexpr int kInfiniteFiltration = std::numeric_limits<int>::max();

int weight(const MilnorBasisElt& a);

/* min weight over terms; kInfiniteFiltration for 0. */
int filtration_v(const MilnorElt& x);

/* binom(n, k) mod 2 via Lucas. */
inline bool binom_odd(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return false;
    return ((n - k) & k) == 0;
}

}  // namespace fcext

#endif
