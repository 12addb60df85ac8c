#include "fcext/algebra.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "fcext/termheap.hpp"

namespace fcext {

Algebra::Algebra(int trunc) : trunc_{trunc}, table_(trunc)
{
    rank_lut_.assign(64 * 64, -1);
    for (int r = 0; r < table_.size(); ++r) {
        const Generator& g = table_[r];
        FCEXT_CHECK(g.i < 64 && g.j < 64, "generator indices out of range");
        rank_lut_[(g.i << 6) | g.j] = r;
    }
}

MilnorBasisElt Algebra::mono_to_basis(const Mono& m) const
{
    MilnorBasisElt p;
    for (uint64_t b = m.bits; b; b &= b - 1) {
        const Generator& g = table_[std::countr_zero(b)];
        if ((int)p.r.size() < g.j)
            p.r.resize(g.j, 0);
        p.r[g.j - 1] |= uint32_t(1) << g.i;
    }
    return p;
}

Mono Algebra::basis_to_mono(const MilnorBasisElt& p) const
{
    uint64_t bits = 0;
    for (size_t k = 0; k < p.r.size(); ++k) {
        for (uint32_t v = p.r[k]; v; v &= v - 1) {
            int i = std::countr_zero(v);
            int rank = rank_lut_[(i << 6) | (int)(k + 1)];
            FCEXT_CHECK(rank >= 0, "Milnor term exceeds the truncation's generator table");
            bits |= uint64_t(1) << rank;
        }
    }
    return mono(bits);
}

const MilnorElt& Algebra::lift_mono(const Mono& m) const
{
    if (!concurrent_) {
        auto it = lift_memo_.find(m.bits);
        if (it != lift_memo_.end())
            return it->second;
    }
    else {
        std::shared_lock lk(lift_mu_);
        auto it = lift_memo_.find(m.bits);
        if (it != lift_memo_.end())
            return it->second;
    }
    return lift_mono_locked(m.bits);
}

const MilnorElt& Algebra::lift_mono_locked(uint64_t bits) const
{
    MilnorElt value;
    if (bits == 0) {
        value = MilnorElt::unit();
    }
    else {
        int top = 63 - std::countl_zero(bits);
        Mono rest = mono(bits & ~(uint64_t(1) << top));
        const Generator& g = table_[top];
        value = milnor_product_elt(lift_mono(rest), MilnorElt::single(MilnorBasisElt::pst(g.i, g.j)), trunc_);
        // the minimal-weight term must be exactly P(R) for the bit set of m
        Mono m = mono(bits);
        int cnt = 0;
        for (const auto& t : value.terms) {
            if (t.weight() == m.fdeg) {
                ++cnt;
                FCEXT_CHECK(basis_to_mono(t).bits == bits, "lifted basis invariant violated");
            }
            else {
                FCEXT_CHECK(t.weight() > m.fdeg, "lifted basis invariant violated");
            }
        }
        FCEXT_CHECK(cnt == 1, "lifted basis invariant violated");
    }
    if (!concurrent_)
        return lift_memo_.try_emplace(bits, std::move(value)).first->second;
    std::unique_lock lk(lift_mu_);
    return lift_memo_.try_emplace(bits, std::move(value)).first->second;
}

AlgElt Algebra::to_pst(const MilnorElt& x) const
{
    std::vector<Mono> out;
    MilnorElt rest = x;
    while (!rest.is_zero()) {
        size_t best = 0;
        int wbest = rest.terms[0].weight();
        for (size_t i = 1; i < rest.terms.size(); ++i) {
            int w = rest.terms[i].weight();
            if (w < wbest) {
                wbest = w;
                best = i;
            }
        }
        Mono m = basis_to_mono(rest.terms[best]);
        out.push_back(m);
        rest = add(rest, lift_mono(m));
    }
    sort_terms(out);
    return AlgElt{std::move(out)};
}

MilnorElt Algebra::to_milnor(const AlgElt& a) const
{
    MilnorElt acc;
    for (const Mono& t : a.terms)
        acc = add(acc, lift_mono(t));
    return acc;
}

GrPolynomial Algebra::pr(const MilnorElt& x) const
{
    GrPolynomial g;
    if (x.is_zero())
        return g;
    int v = filtration_v(x);
    for (const auto& t : x.terms)
        if (t.weight() == v)
            g.terms.push_back(basis_to_mono(t));
    std::sort(g.terms.begin(), g.terms.end(), [](const Mono& a, const Mono& b) { return a > b; });
    return g;
}

const AlgElt& Algebra::mul_mono_mono(const Mono& a, const Mono& b) const
{
    std::pair<uint64_t, uint64_t> key{a.bits, b.bits};
    if (!concurrent_) {
        auto it = prod_memo_.find(key);
        if (it != prod_memo_.end())
            return it->second;
    }
    else {
        std::shared_lock lk(prod_mu_);
        auto it = prod_memo_.find(key);
        if (it != prod_memo_.end())
            return it->second;
    }
    AlgElt value;
    if (a.deg + b.deg <= trunc_.n)
        value = to_pst(milnor_product_elt(lift_mono(a), lift_mono(b), trunc_));
    if (!concurrent_)
        return prod_memo_.try_emplace(key, std::move(value)).first->second;
    std::unique_lock lk(prod_mu_);
    return prod_memo_.try_emplace(key, std::move(value)).first->second;
}

AlgElt Algebra::mul(const Mono& q, const AlgElt& a) const
{
    std::vector<std::vector<Mono>> pieces;
    pieces.reserve(a.terms.size());
    for (const Mono& t : a.terms)
        pieces.push_back(mul_mono_mono(q, t).terms);
    return AlgElt{merge_many(std::move(pieces))};
}

FreeElt Algebra::mul(const Mono& q, const FreeElt& x) const
{
    TermMerger tm;
    for (const ModMono& t : x.terms)
        tm.push_alg(mul_mono_mono(q, t.m), t.slot);
    return FreeElt{tm.drain()};
}

AlgElt Algebra::mul(const AlgElt& a, const AlgElt& b) const
{
    std::vector<std::vector<Mono>> pieces;
    pieces.reserve(a.terms.size() * b.terms.size());
    for (const Mono& s : a.terms)
        for (const Mono& t : b.terms)
            pieces.push_back(mul_mono_mono(s, t).terms);
    return AlgElt{merge_many(std::move(pieces))};
}

FreeElt Algebra::mul(const AlgElt& a, const FreeElt& x) const
{
    TermMerger tm;
    for (const Mono& s : a.terms)
        for (const ModMono& t : x.terms)
            tm.push_alg(mul_mono_mono(s, t.m), t.slot);
    return FreeElt{tm.drain()};
}

AlgElt Algebra::gen_square(int rank) const
{
    Mono g = mono_gen(table_, rank);
    return mul_mono_mono(g, g);
}

}  // namespace fcext
