#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace ph {

// Finite point cloud in R^d with the Euclidean metric.
struct PointCloud {
  std::vector<std::vector<double>> points;

  size_t size() const { return points.size(); }
  size_t dim() const { return points.empty() ? 0 : points[0].size(); }
};

double distance(const PointCloud& cloud, size_t a, size_t b);

// CSV, one point per line, coordinates comma-separated, no header.
void write_cloud_csv(std::ostream& out, const PointCloud& cloud);
PointCloud read_cloud_csv(std::istream& in);

}  // namespace ph
