#include "fekete/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "fekete/errors.hpp"

namespace fekete {
namespace {

// Splits a data line into numbers; returns false for blank / comment lines.
bool parse_numbers(std::string_view line, std::vector<double>& out, const std::string& source, std::size_t lineno) {
  out.clear();
  std::size_t pos = line.find_first_not_of(" \t\r");
  if (pos == std::string_view::npos || line[pos] == '#') return false;
  while (pos != std::string_view::npos) {
    const std::size_t end = line.find_first_of(" \t\r", pos);
    const std::string_view tok = line.substr(pos, end == std::string_view::npos ? line.size() - pos : end - pos);
    if (tok.front() == '#') break;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
      throw ParseError(source, lineno, "not a finite number: '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = end == std::string_view::npos ? end : line.find_first_not_of(" \t\r", end);
  }
  return true;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

}  // namespace

Configuration PointSet::configuration() const {
  if (kind == Kind::sphere) return Configuration(sphere);
  return Configuration::from_roots(plane);
}

std::vector<PlanePoint> PointSet::roots() const {
  if (kind == Kind::plane) return plane;
  return Configuration(sphere).to_plane();
}

PointSet read_point_set(std::istream& in, const std::string& source) {
  PointSet set;
  std::size_t columns = 0;
  std::string line;
  std::vector<double> v;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (!parse_numbers(line, v, source, lineno)) continue;
    if (columns == 0) {
      if (v.size() != 2 && v.size() != 3) {
        throw ParseError(source, lineno, "expected 2 (plane) or 3 (sphere) columns, got " + std::to_string(v.size()));
      }
      columns = v.size();
      set.kind = columns == 2 ? PointSet::Kind::plane : PointSet::Kind::sphere;
    } else if (v.size() != columns) {
      throw ParseError(source, lineno,
                       "expected " + std::to_string(columns) + " columns, got " + std::to_string(v.size()));
    }
    if (columns == 2) {
      set.plane.emplace_back(v[0], v[1]);
    } else {
      if (v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0) throw ParseError(source, lineno, "zero vector is not a sphere point");
      set.sphere.push_back(SpherePoint::normalized(v[0], v[1], v[2]));
    }
  }
  if (set.size() == 0) throw ParseError(source, 0, "no points");
  return set;
}

PointSet read_point_set_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_point_set(in, path);
}

void write_point_set(std::ostream& out, const Configuration& cfg) {
  out << std::setprecision(17);
  for (const auto& x : cfg) out << x.a << ' ' << x.b << ' ' << x.c << '\n';
}

void write_point_set(std::ostream& out, const std::vector<PlanePoint>& points) {
  out << std::setprecision(17);
  for (const auto& z : points) out << z.re << ' ' << z.im << '\n';
}

Polynomial read_polynomial(std::istream& in, const std::string& source) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError(source, 0, "empty polynomial");

  std::vector<Complex> coeffs;
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source, 0, e.what());
    }
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError(source, 0, "missing \"coeffs\" array");
    for (const auto& c : j["coeffs"]) {
      if (c.is_number()) {
        coeffs.emplace_back(c.get<double>(), 0.0);
      } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
        coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
      } else {
        throw ParseError(source, 0, "coefficient " + std::to_string(coeffs.size()) + " is not [re, im]");
      }
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    std::vector<double> v;
    for (std::size_t lineno = 1; std::getline(lines, line); ++lineno) {
      if (!parse_numbers(line, v, source, lineno)) continue;
      if (v.size() != 2) throw ParseError(source, lineno, "expected \"re im\", got " + std::to_string(v.size()) + " columns");
      coeffs.emplace_back(v[0], v[1]);
    }
  }
  if (coeffs.empty()) throw ParseError(source, 0, "no coefficients");
  return Polynomial(std::move(coeffs));
}

Polynomial read_polynomial_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_polynomial(in, path);
}

void write_polynomial(std::ostream& out, const Polynomial& p) {
  out << std::setprecision(17);
  for (const auto& a : p.coeffs()) out << a.real() << ' ' << a.imag() << '\n';
}

}  // namespace fekete
