#include "fcext/chart_io.hpp"

#include <algorithm>
#include <sstream>

namespace fcext {

std::string chart_tsv(const Resolution& res, int t_max)
{
    if (t_max < 0)
        t_max = res.t_done();
    std::vector<ChartEntry> entries = res.chart();
    std::sort(entries.begin(), entries.end(), [](const ChartEntry& a, const ChartEntry& b) {
        if (a.t != b.t)
            return a.t < b.t;
        if (a.s != b.s)
            return a.s < b.s;
        return a.index < b.index;
    });
    std::ostringstream os;
    os << "s\tt\tindex\tname\n";
    for (const ChartEntry& e : entries) {
        if (e.t > t_max)
            continue;
        os << e.s << "\t" << e.t << "\t" << e.index << "\t" << res.gen_name(e.s, e.t, e.index) << "\n";
    }
    return os.str();
}

std::string products_tsv(std::vector<ProductLine> lines)
{
    std::sort(lines.begin(), lines.end(), [](const ProductLine& a, const ProductLine& b) {
        return a.g1 != b.g1 ? a.g1 < b.g1 : a.g2 < b.g2;
    });
    std::ostringstream os;
    os << "g1\tg2\tresult\n";
    for (const ProductLine& l : lines)
        os << l.g1 << "\t" << l.g2 << "\t" << l.result << "\n";
    return os.str();
}

}  // namespace fcext
