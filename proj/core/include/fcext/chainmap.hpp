#ifndef FCEXT_CHAINMAP_HPP
#define FCEXT_CHAINMAP_HPP

#include <map>

#include "fcext/resolution.hpp"

namespace fcext {

/* Serializable chain-map cache for one Ext generator: levels[k] maps flat
 * generator indices of F_{s+k} to values in F_k. */
struct ChainMapBlob {
    int s = 0, t = 0, index = 0;
    std::vector<std::vector<std::pair<int, FreeElt>>> levels;
};

/* Chain-map lifts of the dual-basis cocycles over a minimal resolution of
 * the trivial module, and the Yoneda products they induce.
 *
 * For a generator g at (s_g, t_g), f_0 sends the generator of g to the unit
 * of F_0 and every lift solves d(f_k(v)) = f_{k-1}(d(v)) by reduction
 * against the Groebner data of Im(d_k); commutation is re-checked exactly on
 * every solved value. */
class ChainMaps {
public:
    explicit ChainMaps(const Resolution& res);

    int flat_index(const ChartEntry& g) const;
    ChartEntry entry_of_flat(int s, int flat) const;

    /* f^g_level on the flat-index-j generator of F_{g.s + level}. */
    const FreeElt& value(const ChartEntry& g, int level, int j);

    /* g g2 expressed in the minimal generators at (s+s2, t+t2); returns the
     * indices within that bidegree, sorted. */
    std::vector<int> product(const ChartEntry& g, const ChartEntry& g2);

    std::vector<ChainMapBlob> export_blobs() const;
    void import_blobs(const std::vector<ChainMapBlob>& blobs);

private:
    const std::vector<int>& degs_of_stage(int s) const;

    const Resolution* res_;
    std::map<std::pair<int, int>, std::vector<std::map<int, FreeElt>>> cache_;  // (s, flat) -> levels
};

}  // namespace fcext

#endif
