#include "ph/point_cloud.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ph {

double distance(const PointCloud& cloud, size_t a, size_t b) {
  const auto& x = cloud.points[a];
  const auto& y = cloud.points[b];
  double s = 0.0;
  for (size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    s += d * d;
  }
  return std::sqrt(s);
}

void write_cloud_csv(std::ostream& out, const PointCloud& cloud) {
  char buf[64];
  for (const auto& p : cloud.points) {
    for (size_t k = 0; k < p.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", p[k]);
      if (k > 0) out << ",";
      out << buf;
    }
    out << "\n";
  }
}

PointCloud read_cloud_csv(std::istream& in) {
  PointCloud cloud;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> p;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      size_t pos = 0;
      double v = std::stod(cell, &pos);
      if (!std::isfinite(v)) throw std::runtime_error("cloud csv: non-finite coordinate");
      p.push_back(v);
    }
    if (p.empty()) throw std::runtime_error("cloud csv: empty row");
    if (!cloud.points.empty() && p.size() != cloud.dim())
      throw std::runtime_error("cloud csv: inconsistent point dimension");
    cloud.points.push_back(std::move(p));
  }
  return cloud;
}

}  // namespace ph
