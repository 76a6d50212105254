#include "fekete_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fekete::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;
constexpr int kTicks = 5;

std::string escape(const std::string& s) {
  std::string out;
  for (const char ch : s) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string fmt(double v, int precision) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(precision) << v;
  return ss.str();
}

}  // namespace

void write_series_svg(std::ostream& out, const std::vector<std::pair<double, double>>& series,
                      const std::string& title, const std::string& x_label, const std::string& y_label) {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  if (!series.empty()) {
    const auto [xmin, xmax] = std::minmax_element(series.begin(), series.end());
    x0 = xmin->first;
    x1 = xmax->first;
    const auto [ymin, ymax] = std::minmax_element(series.begin(), series.end(),
                                                  [](const auto& a, const auto& b) { return a.second < b.second; });
    y0 = ymin->second;
    y1 = ymax->second;
  }
  if (x1 - x0 <= 0.0) {
    x0 -= 0.5;
    x1 += 0.5;
  }
  const double pad = std::max(1e-3, 0.1 * (y1 - y0));
  y0 -= pad;
  y1 += pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) { return kMarginLeft + (x - x0) / (x1 - x0) * plot_w; };
  auto py = [&](double y) { return kMarginTop + (y1 - y) / (y1 - y0) * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "  <title>" << escape(title) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << escape(title) << "</text>\n";

  out << "  <g stroke=\"black\" stroke-width=\"1\">\n";
  out << "    <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << kMarginLeft + plot_w
      << "\" y2=\"" << kMarginTop + plot_h << "\"/>\n";
  out << "    <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft << "\" y2=\""
      << kMarginTop + plot_h << "\"/>\n";
  out << "  </g>\n";

  out << "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= kTicks; ++t) {
    const double xv = x0 + (x1 - x0) * t / kTicks;
    const double yv = y0 + (y1 - y0) * t / kTicks;
    out << "    <text x=\"" << fmt(px(xv), 2) << "\" y=\"" << fmt(kMarginTop + plot_h + 16, 2)
        << "\" text-anchor=\"middle\">" << fmt(xv, 1) << "</text>\n";
    out << "    <text x=\"" << fmt(kMarginLeft - 6, 2) << "\" y=\"" << fmt(py(yv) + 4, 2) << "\" text-anchor=\"end\">"
        << fmt(yv, 4) << "</text>\n";
  }
  out << "    <text x=\"" << fmt(kMarginLeft + plot_w / 2, 2) << "\" y=\"" << fmt(kHeight - 10, 2)
      << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
  out << "    <text x=\"16\" y=\"" << fmt(kMarginTop + plot_h / 2, 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fmt(kMarginTop + plot_h / 2, 2) << ")\">" << escape(y_label) << "</text>\n";
  out << "  </g>\n";

  out << "  <g class=\"series\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\">\n";
  out << "    <polyline points=\"";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) out << ' ';
    out << fmt(px(series[i].first), 2) << ',' << fmt(py(series[i].second), 2);
  }
  out << "\"/>\n";
  for (const auto& [x, y] : series) {
    out << "    <circle cx=\"" << fmt(px(x), 2) << "\" cy=\"" << fmt(py(y), 2) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
}

}  // namespace fekete::cli
