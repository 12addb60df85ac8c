#include "svg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

using namespace fcext;

namespace {

struct Dot {
    double x, y;
};

}  // namespace

std::string chart_svg(const Resolution& res, int t_max, const std::vector<ProductLine>& products)
{
    if (t_max < 0)
        t_max = res.t_done();
    std::vector<ChartEntry> entries;
    for (const ChartEntry& e : res.chart())
        if (e.t <= t_max)
            entries.push_back(e);

    int x_max = 0, y_max = 0;
    std::map<std::pair<int, int>, int> mult;
    for (const ChartEntry& e : entries) {
        x_max = std::max(x_max, e.t - e.s);
        y_max = std::max(y_max, e.s);
        mult[{e.t - e.s, e.s}] += 1;
    }

    const double cell = 26, margin = 46, radius = 3.2;
    double w = margin * 2 + cell * (x_max + 1), h = margin * 2 + cell * (y_max + 1);
    auto corner_x = [&](int stem) { return margin + cell * stem; };
    auto corner_y = [&](int s) { return h - margin - cell * s; };

    std::map<std::string, Dot> dot_of;
    std::map<std::pair<int, int>, int> placed;
    for (const ChartEntry& e : entries) {
        int stem = e.t - e.s;
        int n = mult[{stem, e.s}];
        int k = placed[{stem, e.s}]++;
        double off = n == 1 ? 0.0 : (k - (n - 1) / 2.0) * (cell / (n + 1));
        dot_of[res.gen_name(e.s, e.t, e.index)] = Dot{corner_x(stem) + off, corner_y(e.s)};
    }

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <g stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
    for (int x = 0; x <= x_max + 1; ++x)
        os << "    <line x1=\"" << corner_x(x) << "\" y1=\"" << margin << "\" x2=\"" << corner_x(x)
           << "\" y2=\"" << h - margin << "\"/>\n";
    for (int y = 0; y <= y_max + 1; ++y)
        os << "    <line x1=\"" << margin << "\" y1=\"" << corner_y(y) << "\" x2=\"" << w - margin
           << "\" y2=\"" << corner_y(y) << "\"/>\n";
    os << "  </g>\n";
    os << "  <g font-family=\"sans-serif\" font-size=\"9\" fill=\"#555555\">\n";
    for (int x = 0; x <= x_max; x += 4)
        os << "    <text x=\"" << corner_x(x) - 3 << "\" y=\"" << h - margin + 14 << "\">" << x << "</text>\n";
    for (int y = 0; y <= y_max; y += 4)
        os << "    <text x=\"" << margin - 18 << "\" y=\"" << corner_y(y) + 3 << "\">" << y << "</text>\n";
    os << "  </g>\n";
    if (!products.empty()) {
        os << "  <g stroke=\"#777777\" stroke-width=\"0.8\">\n";
        for (const ProductLine& p : products) {
            if (p.g1 != "h0" && p.g1 != "h1" && p.g2 != "h0" && p.g2 != "h1")
                continue;
            const std::string& other = (p.g1 == "h0" || p.g1 == "h1") ? p.g2 : p.g1;
            if (p.result.empty())
                continue;
            auto from = dot_of.find(other);
            if (from == dot_of.end())
                continue;
            std::istringstream rs(p.result);
            std::string target;
            while (std::getline(rs, target, '+')) {
                auto to = dot_of.find(target);
                if (to != dot_of.end())
                    os << "    <line x1=\"" << from->second.x << "\" y1=\"" << from->second.y << "\" x2=\""
                       << to->second.x << "\" y2=\"" << to->second.y << "\"/>\n";
            }
        }
        os << "  </g>\n";
    }
    os << "  <g fill=\"black\">\n";
    for (const auto& [name, d] : dot_of)
        os << "    <circle cx=\"" << d.x << "\" cy=\"" << d.y << "\" r=\"" << radius << "\"><title>" << name
           << "</title></circle>\n";
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}
