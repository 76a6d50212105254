#include "fekete/random.hpp"

#include <cmath>

namespace fekete {

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SpherePoint random_sphere_point(Rng& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    const double x = g(rng), y = g(rng), z = g(rng);
    if (x * x + y * y + z * z > 1e-20) return SpherePoint::normalized(x, y, z);
  }
}

Configuration random_configuration(std::size_t n, Rng& rng) {
  std::vector<SpherePoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(random_sphere_point(rng));
  return Configuration(std::move(pts));
}

std::vector<PlanePoint> random_gaussian_roots(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  std::vector<PlanePoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(g(rng), g(rng));
  return out;
}

std::vector<PlanePoint> random_clustered_roots(std::size_t n, Rng& rng, double radius) {
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> ncenters(1, 3);
  const int k = ncenters(rng);
  std::vector<PlanePoint> centers;
  for (int i = 0; i < k; ++i) centers.emplace_back(g(rng), g(rng));
  std::vector<PlanePoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = centers[i % centers.size()];
    out.emplace_back(c.re + radius * g(rng), c.im + radius * g(rng));
  }
  return out;
}

namespace {

struct Quaternion {
  double w, x, y, z;
};

Quaternion random_unit_quaternion(Rng& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    Quaternion q{g(rng), g(rng), g(rng), g(rng)};
    const double r = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
    if (r > 1e-10) return {q.w / r, q.x / r, q.y / r, q.z / r};
  }
}

}  // namespace

Rotation random_rotation(Rng& rng) {
  const auto [w, x, y, z] = random_unit_quaternion(rng);
  return {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
          2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
          2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
}

Moebius random_unitary_moebius(Rng& rng) {
  const auto [w, x, y, z] = random_unit_quaternion(rng);
  const std::complex<double> alpha(w, x), beta(y, z);
  // SU(2) element [[alpha, -conj(beta)], [beta, conj(alpha)]].
  return {alpha, -std::conj(beta), beta, std::conj(alpha)};
}

Polynomial random_polynomial(std::size_t degree, Rng& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> c(degree + 1);
  for (auto& a : c) a = {g(rng), g(rng)};
  return Polynomial(std::move(c));
}

}  // namespace fekete
