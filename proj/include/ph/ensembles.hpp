#pragma once

#include <cstdint>
#include <string>

#include "ph/point_cloud.hpp"

namespace ph {

// Seeded point-cloud samplers:
//   gaussian3d      i.i.d. standard normal in R^3
//   figure8         lemniscate (sin t, sin t cos t) on a uniform t-grid
//                   starting at 0, plus Gaussian jitter
//   trefoil         (sin t + 2 sin 2t, cos t - 2 cos 2t, -sin 3t) on the same
//                   grid, plus Gaussian jitter
//   sphere_product  two independent uniform points on the unit 2-sphere,
//                   concatenated into R^6, plus Gaussian jitter
// Randomness comes from a splitmix64 stream, so clouds reproduce across
// platforms for a fixed seed. Throws on an unknown ensemble name.
PointCloud sample_ensemble(const std::string& ensemble, int n, uint64_t seed,
                           double jitter = 0.05);

// splitmix64 step, exposed for tests.
uint64_t splitmix64_next(uint64_t& state);

}  // namespace ph
