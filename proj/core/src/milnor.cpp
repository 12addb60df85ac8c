#include "fcext/milnor.hpp"

#include <algorithm>
#include <bit>

#include "fcext/error.hpp"

namespace fcext {

int MilnorBasisElt::degree() const
{
    long long d = 0;
    for (size_t k = 0; k < r.size(); ++k)
        d += (long long)r[k] * ((1LL << (k + 1)) - 1);
    return (int)d;
}

int MilnorBasisElt::weight() const
{
    int w = 0;
    for (size_t k = 0; k < r.size(); ++k)
        w += (int)(2 * (k + 1) - 1) * std::popcount(r[k]);
    return w;
}

void MilnorBasisElt::trim()
{
    while (!r.empty() && r.back() == 0)
        r.pop_back();
}

MilnorBasisElt MilnorBasisElt::sq(uint32_t n)
{
    MilnorBasisElt m;
    if (n)
        m.r = {n};
    return m;
}

MilnorBasisElt MilnorBasisElt::pst(int i, int j)
{
    FCEXT_CHECK(i >= 0 && j >= 1, "pst: need i >= 0, j >= 1");
    MilnorBasisElt m;
    m.r.assign(j, 0);
    m.r[j - 1] = uint32_t(1) << i;
    return m;
}

int weight(const MilnorBasisElt& a)
{
    return a.weight();
}

int filtration_v(const MilnorElt& x)
{
    int v = kInfiniteFiltration;
    for (const auto& t : x.terms)
        v = std::min(v, t.weight());
    return v;
}

MilnorElt add(const MilnorElt& a, const MilnorElt& b)
{
    MilnorElt out;
    std::set_symmetric_difference(a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end(),
                                  std::back_inserter(out.terms));
    return out;
}

namespace {

/* Sort and cancel duplicate terms mod 2. */
void canonicalize(std::vector<MilnorBasisElt>& terms)
{
    std::sort(terms.begin(), terms.end());
    std::vector<MilnorBasisElt> out;
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) & 1)
            out.push_back(std::move(terms[i]));
        i = j;
    }
    terms = std::move(out);
}

struct MatrixEnum {
    const std::vector<uint32_t>& r;
    const std::vector<uint32_t>& s;
    size_t nr, ns;
    std::vector<uint32_t> rrem;     // remaining row budget, rrem[i-1] for row i
    std::vector<uint32_t> srem;     // remaining column budget
    std::vector<uint32_t> diag_or;  // accumulated OR per diagonal over placed inner cells
    std::vector<MilnorBasisElt>* out;

    void run()
    {
        rrem.assign(r.begin(), r.end());
        srem.assign(s.begin(), s.end());
        diag_or.assign(nr + ns + 1, 0);
        cell(1, 1);
    }

    /* Inner cells (i,j), i,j >= 1, visited row-major. */
    void cell(size_t i, size_t j)
    {
        if (i > nr) {
            emit();
            return;
        }
        size_t ni = i, nj = j + 1;
        if (nj > ns) {
            ni = i + 1;
            nj = 1;
        }
        uint32_t vmax = std::min(rrem[i - 1] >> j, srem[j - 1]);
        size_t d = i + j;
        for (uint32_t v = 0; v <= vmax; ++v) {
            if (v & diag_or[d])
                continue;  // multinomial even no matter what
            rrem[i - 1] -= v << j;
            srem[j - 1] -= v;
            diag_or[d] |= v;
            cell(ni, nj);
            diag_or[d] &= ~v;
            rrem[i - 1] += v << j;
            srem[j - 1] += v;
        }
    }

    /* Boundary column x_{i0} = rrem[i], boundary row x_{0j} = srem[j]. */
    void emit()
    {
        std::vector<uint32_t> t(nr + ns, 0);
        std::vector<uint32_t> diag(nr + ns + 1, 0);
        for (size_t d = 1; d <= nr + ns; ++d)
            diag[d] = diag_or[d];
        for (size_t i = 1; i <= nr; ++i) {
            uint32_t v = rrem[i - 1];
            if (v & diag[i])
                return;
            diag[i] |= v;
        }
        for (size_t j = 1; j <= ns; ++j) {
            uint32_t v = srem[j - 1];
            if (v & diag[j])
                return;
            diag[j] |= v;
        }
        for (size_t d = 1; d <= nr + ns; ++d)
            t[d - 1] = diag[d];
        MilnorBasisElt p{std::move(t)};
        p.trim();
        out->push_back(std::move(p));
    }
};

}  // namespace

MilnorElt milnor_product(const MilnorBasisElt& a, const MilnorBasisElt& b, TruncationBound trunc)
{
    if (a.degree() + b.degree() > trunc.n)
        return MilnorElt::zero();
    if (a.r.empty())
        return MilnorElt::single(b);
    if (b.r.empty())
        return MilnorElt::single(a);
    MilnorElt result;
    MatrixEnum e{a.r, b.r, a.r.size(), b.r.size(), {}, {}, {}, &result.terms};
    e.run();
    canonicalize(result.terms);
    return result;
}

MilnorElt milnor_product_elt(const MilnorElt& a, const MilnorElt& b, TruncationBound trunc)
{
    std::vector<MilnorBasisElt> acc;
    for (const auto& x : a.terms) {
        for (const auto& y : b.terms) {
            MilnorElt p = milnor_product(x, y, trunc);
            acc.insert(acc.end(), p.terms.begin(), p.terms.end());
        }
    }
    canonicalize(acc);
    return MilnorElt{std::move(acc)};
}

MilnorElt adem_expand(int i, int j)
{
    FCEXT_CHECK(i > 0 && i < 2 * j, "adem_expand: need 0 < i < 2j");
    TruncationBound trunc{i + j};
    MilnorElt sum;
    for (int k = 0; k <= i / 2; ++k) {
        if (!binom_odd(j - k - 1, i - 2 * k))
            continue;
        MilnorElt term = milnor_product(MilnorBasisElt::sq(uint32_t(i + j - k)), MilnorBasisElt::sq(uint32_t(k)), trunc);
        sum = add(sum, term);
    }
    return sum;
}

}  // namespace fcext
