#include "ph/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ph {

uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  // uniform in (0, 1]
  double uniform() {
    return (static_cast<double>(splitmix64_next(state) >> 11) + 1.0) * 0x1.0p-53;
  }

  // Box-Muller
  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  std::vector<double> unit_sphere3() {
    double x, y, z, norm;
    do {
      x = gaussian();
      y = gaussian();
      z = gaussian();
      norm = std::sqrt(x * x + y * y + z * z);
    } while (norm < 1e-12);
    return {x / norm, y / norm, z / norm};
  }
};

}  // namespace

PointCloud sample_ensemble(const std::string& ensemble, int n, uint64_t seed,
                           double jitter) {
  if (n < 1) throw std::invalid_argument("ensemble sample size must be >= 1");
  Rng rng(seed);
  PointCloud cloud;
  const double tau = 2.0 * std::numbers::pi;

  if (ensemble == "gaussian3d") {
    for (int i = 0; i < n; ++i)
      cloud.points.push_back({rng.gaussian(), rng.gaussian(), rng.gaussian()});
  } else if (ensemble == "figure8") {
    for (int i = 0; i < n; ++i) {
      const double t = tau * i / n;
      cloud.points.push_back({std::sin(t) + jitter * rng.gaussian(),
                              std::sin(t) * std::cos(t) + jitter * rng.gaussian()});
    }
  } else if (ensemble == "trefoil") {
    for (int i = 0; i < n; ++i) {
      const double t = tau * i / n;
      cloud.points.push_back(
          {std::sin(t) + 2.0 * std::sin(2.0 * t) + jitter * rng.gaussian(),
           std::cos(t) - 2.0 * std::cos(2.0 * t) + jitter * rng.gaussian(),
           -std::sin(3.0 * t) + jitter * rng.gaussian()});
    }
  } else if (ensemble == "sphere_product") {
    for (int i = 0; i < n; ++i) {
      std::vector<double> p = rng.unit_sphere3();
      std::vector<double> q = rng.unit_sphere3();
      p.insert(p.end(), q.begin(), q.end());
      for (double& c : p) c += jitter * rng.gaussian();
      cloud.points.push_back(std::move(p));
    }
  } else {
    throw std::invalid_argument("unknown ensemble: " + ensemble);
  }
  return cloud;
}

}  // namespace ph
