#ifndef FCEXT_CHART_IO_HPP
#define FCEXT_CHART_IO_HPP

#include <string>

#include "fcext/resolution.hpp"

namespace fcext {

/* Header "s\tt\tindex\tname", one row per minimal generator with t <= t_max
 * (t_max < 0 means the frontier), sorted by (t, s, index). */
std::string chart_tsv(const Resolution& res, int t_max = -1);

struct ProductLine {
    std::string g1, g2, result;  // result: '+'-joined generator names, empty = zero
};

/* Header "g1\tg2\tresult", rows sorted by (g1, g2). */
std::string products_tsv(std::vector<ProductLine> lines);

}  // namespace fcext

#endif
