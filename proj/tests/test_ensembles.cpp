#include <doctest.h>

#include <cmath>

#include "ph/ensembles.hpp"

using namespace ph;

TEST_CASE("ensemble shapes") {
  CHECK(sample_ensemble("gaussian3d", 10, 1).points.size() == 10);
  CHECK(sample_ensemble("gaussian3d", 10, 1).points[0].size() == 3);
  CHECK(sample_ensemble("figure8", 7, 1).points[0].size() == 2);
  CHECK(sample_ensemble("trefoil", 7, 1).points[0].size() == 3);
  CHECK(sample_ensemble("sphere_product", 5, 1).points[0].size() == 6);
}

TEST_CASE("same seed, same cloud; different seed, different cloud") {
  const PointCloud a = sample_ensemble("gaussian3d", 12, 42);
  const PointCloud b = sample_ensemble("gaussian3d", 12, 42);
  const PointCloud c = sample_ensemble("gaussian3d", 12, 43);
  CHECK(a.points == b.points);
  CHECK(a.points != c.points);
}

TEST_CASE("curve ensembles start at their parametric origin when unjittered") {
  const PointCloud fig = sample_ensemble("figure8", 4, 9, 0.0);
  CHECK(fig.points[0][0] == doctest::Approx(0.0));
  CHECK(fig.points[0][1] == doctest::Approx(0.0));

  const PointCloud tre = sample_ensemble("trefoil", 4, 9, 0.0);
  CHECK(tre.points[0][0] == doctest::Approx(0.0));
  CHECK(tre.points[0][1] == doctest::Approx(-1.0));
  CHECK(tre.points[0][2] == doctest::Approx(0.0));
}

TEST_CASE("sphere product factors sit on unit spheres when unjittered") {
  const PointCloud cloud = sample_ensemble("sphere_product", 20, 5, 0.0);
  for (const auto& p : cloud.points) {
    double n1 = 0, n2 = 0;
    for (int k = 0; k < 3; ++k) {
      n1 += p[k] * p[k];
      n2 += p[3 + k] * p[3 + k];
    }
    CHECK(std::sqrt(n1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::sqrt(n2) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("all values are finite with the default jitter") {
  for (const char* name : {"gaussian3d", "figure8", "trefoil", "sphere_product"})
    for (const auto& p : sample_ensemble(name, 25, 77).points)
      for (double x : p) CHECK(std::isfinite(x));
}

TEST_CASE("invalid requests are rejected") {
  CHECK_THROWS(sample_ensemble("torus", 5, 1));
  CHECK_THROWS(sample_ensemble("gaussian3d", 0, 1));
}
