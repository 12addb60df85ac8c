#ifndef FCEXT_TOOLS_SVG_HPP
#define FCEXT_TOOLS_SVG_HPP

#include <string>

#include "fcext/chart_io.hpp"

/* Adams chart: x = t - s, y = s, one dot per generator; h0 and h1
 * multiplication lines when a product table is supplied. */
std::string chart_svg(const fcext::Resolution& res, int t_max, const std::vector<fcext::ProductLine>& products);

#endif
