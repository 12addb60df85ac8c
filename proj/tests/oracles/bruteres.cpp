#include "bruteres.hpp"

#include <algorithm>

#include "echelon.hpp"
#include "fcext/error.hpp"
#include "pairing.hpp"

namespace fcext::oracle {

namespace {

struct BasisCtx {
    std::map<int, std::vector<MilnorBasisElt>> basis;
    std::map<int, std::map<MilnorBasisElt, int>> index;

    const std::vector<MilnorBasisElt>& of(int d)
    {
        auto it = basis.find(d);
        if (it == basis.end()) {
            it = basis.emplace(d, milnor_basis(d)).first;
            auto& idx = index[d];
            for (size_t k = 0; k < it->second.size(); ++k)
                idx[it->second[k]] = (int)k;
        }
        return it->second;
    }
    int pos(int d, const MilnorBasisElt& m)
    {
        of(d);
        return index.at(d).at(m);
    }
};

/* flattened basis offsets of (A^r)_d */
std::vector<int> offsets(BasisCtx& ctx, const std::vector<int>& gen_degs, int d, int& total)
{
    std::vector<int> off(gen_degs.size(), -1);
    total = 0;
    for (size_t j = 0; j < gen_degs.size(); ++j) {
        if (d - gen_degs[j] < 0)
            continue;
        off[j] = total;
        total += (int)ctx.of(d - gen_degs[j]).size();
    }
    return off;
}

std::vector<uint64_t> to_row(BasisCtx& ctx, const std::vector<int>& gen_degs, const BruteElt& x, int d,
                             const std::vector<int>& off, int total)
{
    std::vector<uint64_t> row((total + 63) / 64, 0);
    // x may predate later generators of the ambient module; absent slots are zero
    for (size_t j = 0; j < x.size() && j < gen_degs.size(); ++j) {
        for (const MilnorBasisElt& m : x[j].terms) {
            FCEXT_CHECK(m.degree() + gen_degs[j] == d, "brute oracle: inhomogeneous element");
            int p = off[j] + ctx.pos(d - gen_degs[j], m);
            row[p / 64] ^= uint64_t(1) << (p % 64);
        }
    }
    return row;
}

BruteElt from_bits(BasisCtx& ctx, const std::vector<int>& gen_degs, const std::vector<uint64_t>& v, int d,
                   const std::vector<int>& off)
{
    BruteElt x(gen_degs.size());
    for (size_t j = 0; j < gen_degs.size(); ++j) {
        if (off[j] < 0)
            continue;
        const auto& bs = ctx.of(d - gen_degs[j]);
        for (size_t k = 0; k < bs.size(); ++k) {
            size_t p = (size_t)off[j] + k;
            if (v[p / 64] >> (p % 64) & 1)
                x[j] = add(x[j], MilnorElt::single(bs[k]));
        }
    }
    return x;
}

BruteElt scale(const BruteElt& x, const MilnorBasisElt& b, int trunc)
{
    BruteElt out(x.size());
    for (size_t j = 0; j < x.size(); ++j)
        out[j] = milnor_product_elt(MilnorElt::single(b), x[j], TruncationBound{trunc});
    return out;
}

/* rows spanning the degree-d part of the submodule generated by gens */
std::vector<std::vector<uint64_t>> span_rows(BasisCtx& ctx, const std::vector<int>& gen_degs,
                                             const std::vector<BruteElt>& gens, int d,
                                             const std::vector<int>& off, int total)
{
    std::vector<std::vector<uint64_t>> rows;
    for (const BruteElt& g : gens) {
        int gdeg = -1;
        for (size_t j = 0; j < g.size(); ++j)
            for (const MilnorBasisElt& m : g[j].terms)
                gdeg = m.degree() + gen_degs[j];
        if (gdeg < 0 || gdeg > d)
            continue;
        for (const MilnorBasisElt& b : ctx.of(d - gdeg))
            rows.push_back(to_row(ctx, gen_degs, scale(g, b, d), d, off, total));
    }
    return rows;
}

}  // namespace

int64_t free_module_dim(const std::vector<int>& gen_degs, int d)
{
    BasisCtx ctx;
    int total = 0;
    offsets(ctx, gen_degs, d, total);
    return total;
}

int64_t submodule_dim(const std::vector<int>& gen_degs, const std::vector<BruteElt>& gens, int d)
{
    BasisCtx ctx;
    int total = 0;
    std::vector<int> off = offsets(ctx, gen_degs, d, total);
    Echelon ech;
    int64_t dim = 0;
    for (auto& row : span_rows(ctx, gen_degs, gens, d, off, total))
        if (ech.insert(std::move(row)))
            ++dim;
    return dim;
}

BruteResolution::BruteResolution(std::vector<int> gen_degs, std::vector<BruteElt> relations, int s_cap, int t_cap)
{
    BasisCtx ctx;
    for (int d : gen_degs)
        ranks_[{0, d}] += 1;
    // stage s >= 1: chosen generators (degree, value in F_{s-1})
    std::vector<std::vector<std::pair<int, BruteElt>>> stages(s_cap);
    std::vector<std::vector<int>> stage_degs(s_cap + 1);
    stage_degs[0] = gen_degs;

    for (int t = 0; t <= t_cap; ++t) {
        for (int s = 1; s <= s_cap; ++s) {
            const std::vector<int>& dom_degs = stage_degs[s - 1];
            int cod_total = 0, dom_total = 0;
            std::vector<int> dom_off = offsets(ctx, dom_degs, t, dom_total);

            std::vector<std::vector<uint64_t>> cands;
            if (s == 1) {
                cands = span_rows(ctx, dom_degs, relations, t, dom_off, dom_total);
            }
            else if (dom_total > 0) {
                // kernel of d_{s-1} at degree t: columns = domain basis
                const std::vector<int>& cod_degs = stage_degs[s - 2];
                std::vector<int> cod_off = offsets(ctx, cod_degs, t, cod_total);
                BitMatrix m(cod_total, dom_total);
                int col = 0;
                for (size_t j = 0; j < dom_degs.size(); ++j) {
                    if (dom_off[j] < 0)
                        continue;
                    for (const MilnorBasisElt& b : ctx.of(t - dom_degs[j])) {
                        BruteElt img = scale(stages[s - 2][j].second, b, t);
                        auto row = to_row(ctx, cod_degs, img, t, cod_off, cod_total);
                        for (int c = 0; c < cod_total; ++c)
                            if (row[c / 64] >> (c % 64) & 1)
                                m.set(c, col);
                        ++col;
                    }
                }
                cands = kernel_basis(m);
            }

            std::vector<BruteElt> chosen;
            for (auto& [deg, val] : stages[s - 1])
                chosen.push_back(val);
            Echelon ech;
            for (auto& row : span_rows(ctx, dom_degs, chosen, t, dom_off, dom_total))
                ech.insert(std::move(row));
            int new_count = 0;
            for (auto& v : cands) {
                auto res = ech.residue(v);
                if (Echelon::pivot_of(res) == SIZE_MAX)
                    continue;
                ech.rows.push_back({Echelon::pivot_of(res), res});
                stages[s - 1].push_back({t, from_bits(ctx, dom_degs, res, t, dom_off)});
                stage_degs[s].push_back(t);
                ++new_count;
            }
            if (new_count)
                ranks_[{s, t}] += new_count;
        }
    }
}

int BruteResolution::rank(int s, int t) const
{
    auto it = ranks_.find({s, t});
    return it == ranks_.end() ? 0 : it->second;
}

}  // namespace fcext::oracle
