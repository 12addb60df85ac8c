#include "fcext/chainmap.hpp"

#include <algorithm>

namespace fcext {

ChainMaps::ChainMaps(const Resolution& res) : res_(&res)
{
    FCEXT_CHECK(res.trivial_module(), "chain-map products need a resolution of the trivial module");
}

const std::vector<int>& ChainMaps::degs_of_stage(int s) const
{
    return s == 0 ? res_->presentation().gen_degrees : res_->stage_degs(s);
}

int ChainMaps::flat_index(const ChartEntry& g) const
{
    const std::vector<int>& degs = degs_of_stage(g.s);
    int k = g.index;
    for (size_t j = 0; j < degs.size(); ++j) {
        if (degs[j] == g.t && k-- == 0)
            return (int)j;
    }
    throw Error("no generator at (" + std::to_string(g.s) + "," + std::to_string(g.t) + ")");
}

ChartEntry ChainMaps::entry_of_flat(int s, int flat) const
{
    const std::vector<int>& degs = degs_of_stage(s);
    int t = degs[flat], index = 0;
    for (int j = 0; j < flat; ++j)
        if (degs[j] == t)
            ++index;
    return ChartEntry{s, t, index};
}

const FreeElt& ChainMaps::value(const ChartEntry& g, int level, int j)
{
    auto& levels = cache_[{g.s, flat_index(g)}];
    if ((int)levels.size() <= level)
        levels.resize(level + 1);
    auto it = levels[level].find(j);
    if (it != levels[level].end())
        return it->second;

    const Algebra& alg = res_->algebra();
    FreeElt val;
    if (level == 0) {
        if (j == flat_index(g))
            val = FreeElt{{ModMono{Mono{}, 0}}};
    }
    else {
        int src_stage = g.s + level;
        const FreeElt& dv = res_->d_value(src_stage, j);
        std::vector<std::vector<ModMono>> pieces;
        pieces.reserve(dv.terms.size());
        for (const ModMono& term : dv.terms)
            pieces.push_back(alg.mul(term.m, value(g, level - 1, term.slot)).terms);
        FreeElt y{merge_many(std::move(pieces))};
        if (!y.is_zero()) {
            const Groebner& gb = res_->stage_gb(level);
            ReductionResult r = gb.reduce_full(y, true);
            FCEXT_CHECK(r.rem.is_zero(), "chain map: target not in the image (resolution incomplete?)");
            val = gb.steps_in_inputs(r.steps);
            // exact commutation check: d(val) must reproduce y
            std::vector<std::vector<ModMono>> back;
            back.reserve(val.terms.size());
            for (const ModMono& term : val.terms)
                back.push_back(alg.mul(term.m, res_->d_value(level, term.slot)).terms);
            FCEXT_CHECK(FreeElt{merge_many(std::move(back))} == y, "chain map: d o f != f o d");
        }
    }
    return levels[level].emplace(j, std::move(val)).first->second;
}

std::vector<int> ChainMaps::product(const ChartEntry& g, const ChartEntry& g2)
{
    int S = g.s + g2.s, T = g.t + g2.t;
    FCEXT_CHECK(S <= res_->s_max(), "product beyond s_max");
    FCEXT_CHECK(T <= res_->t_done(), "product beyond the computed range");
    int target_flat = flat_index(g2);
    std::vector<int> out;
    const std::vector<int>& degs = degs_of_stage(S);
    int index = 0;
    for (size_t j = 0; j < degs.size(); ++j) {
        if (degs[j] != T)
            continue;
        const FreeElt& u = value(g, g2.s, (int)j);
        for (const ModMono& term : u.terms) {
            if (term.m.is_unit() && term.slot == target_flat) {
                out.push_back(index);
                break;
            }
        }
        ++index;
    }
    return out;
}

std::vector<ChainMapBlob> ChainMaps::export_blobs() const
{
    std::vector<ChainMapBlob> out;
    for (const auto& [key, levels] : cache_) {
        ChartEntry e = entry_of_flat(key.first, key.second);
        ChainMapBlob blob;
        blob.s = e.s;
        blob.t = e.t;
        blob.index = e.index;
        for (const auto& level : levels)
            blob.levels.emplace_back(level.begin(), level.end());
        out.push_back(std::move(blob));
    }
    return out;
}

void ChainMaps::import_blobs(const std::vector<ChainMapBlob>& blobs)
{
    for (const ChainMapBlob& blob : blobs) {
        int flat = flat_index(ChartEntry{blob.s, blob.t, blob.index});
        auto& levels = cache_[{blob.s, flat}];
        levels.assign(blob.levels.size(), {});
        for (size_t k = 0; k < blob.levels.size(); ++k)
            for (const auto& [j, val] : blob.levels[k])
                levels[k].emplace(j, val);
    }
}

}  // namespace fcext
