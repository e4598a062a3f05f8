// svg_plot.hpp - self-contained log-log SVG rendering of convergence reports
#pragma once

#include <string>

#include "dtrain/convergence.hpp"

namespace dtrain::cli {

// 800 x 600 SVG 1.1 document: error-vs-N points and polyline on log-log axes,
// a dashed guide line at the fitted slope, and a parameter annotation string
void write_loglog_svg(const ConvergenceReport& report, const std::string& annotation,
                      const std::string& path);

} // namespace dtrain::cli
