#ifndef FCEXT_FC_ORDER_HPP
#define FCEXT_FC_ORDER_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fcext/error.hpp"

namespace fcext {

/* Exterior generator P^i_j of gr(A).  deg = 2^i (2^j - 1), fdeg = 2j - 1.
 * All degrees are distinct; rank is the position in the ascending-degree
 * enumeration of the whole family, so it does not depend on truncation. */
struct Generator {
    int i, j;
    int deg;
    int fdeg;
};

/* Generators with deg <= trunc, ranked ascending by degree. */
class GenTable {
public:
    static constexpr int kMaxGenerators = 64;

    explicit GenTable(int trunc);

    int trunc() const { return trunc_; }
    int size() const { return (int)gens_.size(); }
    const Generator& operator[](int rank) const { return gens_[rank]; }
    int rank_of(int i, int j) const;  // -1 if beyond truncation

private:
    int trunc_;
    std::vector<Generator> gens_;
};

/* Square-free monomial in the P^i_j, bit r set = generator of rank r.
 * deg/fdeg are cached sums over the factors. */
struct Mono {
    uint64_t bits = 0;
    int32_t deg = 0;
    int32_t fdeg = 0;

    bool is_unit() const { return bits == 0; }
    bool operator==(const Mono& o) const { return bits == o.bits; }
};

/* The degree-reversed admissible order: a < b iff fdeg(a) > fdeg(b), or
 * fdeg equal and a is lexicographically greater (scanning ascending rank,
 * the first differing exponent decides, larger exponent = lex-greater).
 * Reduction replaces a term by terms of weakly higher filtration, so higher
 * filtration degree must compare smaller. */
inline std::strong_ordering cmp(const Mono& a, const Mono& b)
{
    if (a.fdeg != b.fdeg)
        return b.fdeg <=> a.fdeg;
    if (a.bits == b.bits)
        return std::strong_ordering::equal;
    uint64_t diff = a.bits ^ b.bits;
    uint64_t low = diff & (~diff + 1);
    return (a.bits & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

inline bool operator<(const Mono& a, const Mono& b) { return cmp(a, b) < 0; }
inline bool operator>(const Mono& a, const Mono& b) { return cmp(a, b) > 0; }

Mono mono_from_bits(const GenTable& table, uint64_t bits);
Mono mono_gen(const GenTable& table, int rank);

inline bool divides(const Mono& a, const Mono& b) { return (a.bits & ~b.bits) == 0; }
bool mono_mul_squarefree(const GenTable& table, const Mono& a, const Mono& b, Mono& out);  // false if not square-free
Mono lcm(const GenTable& table, const Mono& a, const Mono& b);
Mono quotient(const Mono& num, const Mono& den);  // requires den | num

/* Monomial m e_slot of a free module A^r.  Slots are 0-based in code and
 * printed 1-based.  Lower slot index is larger. */
struct ModMono {
    Mono m;
    int32_t slot = 0;

    bool operator==(const ModMono& o) const { return slot == o.slot && m == o.m; }
};

inline std::strong_ordering cmp(const ModMono& a, const ModMono& b)
{
    if (a.slot != b.slot)
        return b.slot <=> a.slot;
    return cmp(a.m, b.m);
}

inline bool operator<(const ModMono& a, const ModMono& b) { return cmp(a, b) < 0; }
inline bool operator>(const ModMono& a, const ModMono& b) { return cmp(a, b) > 0; }

inline bool divides(const ModMono& a, const ModMono& b) { return a.slot == b.slot && divides(a.m, b.m); }

/* Element of gr(A): F_2-sum of monomials, strictly descending. */
struct GrPolynomial {
    std::vector<Mono> terms;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const GrPolynomial&) const = default;
};

/* Element of A in the lifted basis, strictly descending terms. */
struct AlgElt {
    std::vector<Mono> terms;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const AlgElt&) const = default;
    static AlgElt unit() { return {{Mono{}}}; }
};

/* Element of A^r in the lifted module basis, strictly descending terms. */
struct FreeElt {
    std::vector<ModMono> terms;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const FreeElt&) const = default;
};

AlgElt add(const AlgElt& a, const AlgElt& b);
FreeElt add(const FreeElt& a, const FreeElt& b);

/* First (largest) term; error on zero. */
const Mono& leading(const AlgElt& x);
const ModMono& leading(const FreeElt& x);

/* Sum of the minimal-fdeg terms. */
GrPolynomial pr_elt(const AlgElt& x);

void sort_terms(std::vector<Mono>& terms);     // descending, cancel mod 2
void sort_terms(std::vector<ModMono>& terms);

/* Balanced merge of descending-sorted term lists with mod-2 cancellation. */
std::vector<Mono> merge_many(std::vector<std::vector<Mono>> pieces);
std::vector<ModMono> merge_many(std::vector<std::vector<ModMono>> pieces);

/* All square-free monomials of the given degree. */
std::vector<Mono> monomials_of_degree(const GenTable& table, int deg);

std::string to_string(const GenTable& table, const Mono& m);    // "P(i,j)*P(i,j)..." or "1"
std::string to_string(const GenTable& table, const ModMono& m); // "...*e<k>"

}  // namespace fcext

#endif
