#ifndef FCEXT_ORACLE_ECHELON_HPP
#define FCEXT_ORACLE_ECHELON_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace fcext::oracle {

/* Incremental F_2 row space with distinct pivots (lowest set bit). */
struct Echelon {
    std::vector<std::pair<size_t, std::vector<uint64_t>>> rows;

    static size_t pivot_of(const std::vector<uint64_t>& v)
    {
        for (size_t w = 0; w < v.size(); ++w)
            if (v[w])
                return w * 64 + std::countr_zero(v[w]);
        return SIZE_MAX;
    }

    std::vector<uint64_t> residue(std::vector<uint64_t> v) const
    {
        for (const auto& [p, r] : rows) {
            if (p / 64 < v.size() && (v[p / 64] >> (p % 64) & 1))
                for (size_t w = 0; w < r.size() && w < v.size(); ++w)
                    v[w] ^= r[w];
        }
        return v;
    }

    bool insert(std::vector<uint64_t> v)
    {
        v = residue(std::move(v));
        size_t p = pivot_of(v);
        if (p == SIZE_MAX)
            return false;
        rows.push_back({p, std::move(v)});
        return true;
    }

    size_t rank() const { return rows.size(); }
    bool contains(std::vector<uint64_t> v) const { return pivot_of(residue(std::move(v))) == SIZE_MAX; }
};

}  // namespace fcext::oracle

#endif
