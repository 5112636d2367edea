#pragma once

#include <iosfwd>
#include <vector>

#include "ph/boundary.hpp"
#include "ph/point_cloud.hpp"

namespace ph {

struct Simplex {
  std::vector<Index> vertices;  // sorted ascending, 1-based point ids
  int dim = 0;                  // |vertices| - 1
  double scale = 0.0;           // entry scale; 0 for vertices
};

// Compatibly ordered simplex list: faces precede cofaces and scales are
// non-decreasing along the order. Ties within a scale level break by
// dimension ascending, then lexicographically by vertex set.
struct Filtration {
  std::vector<Simplex> simplices;
  std::vector<double> scale_grid;  // r_1 < ... < r_T

  Index size() const { return static_cast<Index>(simplices.size()); }
};

// Vietoris-Rips filtration over the uniform grid r_i = i * r_max / divisions.
// A simplex enters at the smallest scale r with diam <= 2r; vertices enter
// at scale 0. Simplices with more than max_dim+1 vertices or diameter above
// 2*r_max are excluded.
Filtration build_vietoris_rips(const PointCloud& cloud, double r_max,
                               int divisions, int max_dim);

// Boundary matrix of the filtration in its compatible order.
BoundaryMatrix boundary_matrix(const Filtration& filtration);

// Debug text format: one line per simplex, `index dim scale v1 v2 ... vk`.
void write_filtration(std::ostream& out, const Filtration& filtration);
Filtration read_filtration(std::istream& in);

}  // namespace ph
