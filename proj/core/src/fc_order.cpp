#include "fcext/fc_order.hpp"

#include <algorithm>
#include <bit>

namespace fcext {

GenTable::GenTable(int trunc) : trunc_(trunc)
{
    for (int j = 1; (1 << j) - 1 <= trunc; ++j) {
        int base = (1 << j) - 1;
        for (int i = 0; base <= trunc >> i; ++i)
            gens_.push_back({i, j, base << i, 2 * j - 1});
    }
    std::sort(gens_.begin(), gens_.end(), [](const Generator& a, const Generator& b) { return a.deg < b.deg; });
    FCEXT_CHECK((int)gens_.size() <= kMaxGenerators,
                "truncation degree needs more than 64 exterior generators");
}

int GenTable::rank_of(int i, int j) const
{
    for (int r = 0; r < size(); ++r)
        if (gens_[r].i == i && gens_[r].j == j)
            return r;
    return -1;
}

Mono mono_from_bits(const GenTable& table, uint64_t bits)
{
    Mono m{bits, 0, 0};
    for (uint64_t b = bits; b; b &= b - 1) {
        const Generator& g = table[std::countr_zero(b)];
        m.deg += g.deg;
        m.fdeg += g.fdeg;
    }
    return m;
}

Mono mono_gen(const GenTable& table, int rank)
{
    const Generator& g = table[rank];
    return Mono{uint64_t(1) << rank, g.deg, g.fdeg};
}

bool mono_mul_squarefree(const GenTable&, const Mono& a, const Mono& b, Mono& out)
{
    if (a.bits & b.bits)
        return false;
    out = Mono{a.bits | b.bits, a.deg + b.deg, a.fdeg + b.fdeg};
    return true;
}

Mono lcm(const GenTable& table, const Mono& a, const Mono& b)
{
    return mono_from_bits(table, a.bits | b.bits);
}

Mono quotient(const Mono& num, const Mono& den)
{
    FCEXT_CHECK(divides(den, num), "quotient: denominator does not divide");
    return Mono{num.bits & ~den.bits, num.deg - den.deg, num.fdeg - den.fdeg};
}

namespace {

template <typename T>
std::vector<T> merge_cancel(const std::vector<T>& a, const std::vector<T>& b)
{
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                                  [](const T& x, const T& y) { return x > y; });
    return out;
}

}  // namespace

AlgElt add(const AlgElt& a, const AlgElt& b)
{
    return AlgElt{merge_cancel(a.terms, b.terms)};
}

FreeElt add(const FreeElt& a, const FreeElt& b)
{
    return FreeElt{merge_cancel(a.terms, b.terms)};
}

const Mono& leading(const AlgElt& x)
{
    FCEXT_CHECK(!x.is_zero(), "leading: zero element");
    return x.terms.front();
}

const ModMono& leading(const FreeElt& x)
{
    FCEXT_CHECK(!x.is_zero(), "leading: zero element");
    return x.terms.front();
}

GrPolynomial pr_elt(const AlgElt& x)
{
    GrPolynomial g;
    if (x.is_zero())
        return g;
    int fmin = x.terms.front().fdeg;
    for (const Mono& t : x.terms)
        fmin = std::min(fmin, (int)t.fdeg);
    for (const Mono& t : x.terms)
        if (t.fdeg == fmin)
            g.terms.push_back(t);
    std::sort(g.terms.begin(), g.terms.end(), [](const Mono& a, const Mono& b) { return a > b; });
    return g;
}

template <typename T>
static void sort_cancel(std::vector<T>& terms)
{
    std::sort(terms.begin(), terms.end(), [](const T& a, const T& b) { return a > b; });
    std::vector<T> out;
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) & 1)
            out.push_back(terms[i]);
        i = j;
    }
    terms = std::move(out);
}

void sort_terms(std::vector<Mono>& terms) { sort_cancel(terms); }
void sort_terms(std::vector<ModMono>& terms) { sort_cancel(terms); }

template <typename T>
static std::vector<T> merge_many_impl(std::vector<std::vector<T>> pieces)
{
    if (pieces.empty())
        return {};
    while (pieces.size() > 1) {
        std::vector<std::vector<T>> next;
        next.reserve((pieces.size() + 1) / 2);
        for (size_t k = 0; k + 1 < pieces.size(); k += 2)
            next.push_back(merge_cancel(pieces[k], pieces[k + 1]));
        if (pieces.size() & 1)
            next.push_back(std::move(pieces.back()));
        pieces = std::move(next);
    }
    return std::move(pieces.front());
}

std::vector<Mono> merge_many(std::vector<std::vector<Mono>> pieces)
{
    return merge_many_impl(std::move(pieces));
}

std::vector<ModMono> merge_many(std::vector<std::vector<ModMono>> pieces)
{
    return merge_many_impl(std::move(pieces));
}

std::vector<Mono> monomials_of_degree(const GenTable& table, int deg)
{
    std::vector<Mono> out;
    Mono cur{};
    // generators are sorted ascending by degree, so prune once one is too big
    auto dfs = [&](auto&& self, int rank, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(mono_from_bits(table, cur.bits));
            return;
        }
        for (int r = rank; r < table.size() && table[r].deg <= remaining; ++r) {
            cur.bits |= uint64_t(1) << r;
            self(self, r + 1, remaining - table[r].deg);
            cur.bits &= ~(uint64_t(1) << r);
        }
    };
    dfs(dfs, 0, deg);
    return out;
}

std::string to_string(const GenTable& table, const Mono& m)
{
    if (m.is_unit())
        return "1";
    std::string s;
    for (uint64_t b = m.bits; b; b &= b - 1) {
        const Generator& g = table[std::countr_zero(b)];
        if (!s.empty())
            s += '*';
        s += "P(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
    }
    return s;
}

std::string to_string(const GenTable& table, const ModMono& m)
{
    std::string s = m.m.is_unit() ? "" : to_string(table, m.m) + "*";
    return s + "e" + std::to_string(m.slot + 1);
}

}  // namespace fcext
