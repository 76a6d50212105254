#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fekete::cli {

// Standalone SVG line chart of a single (x, y) series with labelled axes.
void write_series_svg(std::ostream& out, const std::vector<std::pair<double, double>>& series,
                      const std::string& title, const std::string& x_label, const std::string& y_label);

}  // namespace fekete::cli
