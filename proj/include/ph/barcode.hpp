#pragma once

#include <iosfwd>
#include <vector>

#include "ph/boundary.hpp"
#include "ph/filtration.hpp"

namespace ph {

struct Interval {
  double birth = 0.0;
  double death = 0.0;  // +inf for essential classes
  int dim = 0;

  bool essential() const;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

using Barcode = std::vector<Interval>;

// Persistence pairs from a reduced low vector: one finite interval per
// nonzero lowstar(j), one unbounded interval per essential index (a zero
// column never hit by a lowstar value). Intervals are sorted by
// (dim, birth, death). Throws if lowstar is not injective over its support.
Barcode extract_pairs(const Filtration& filtration, const LowVector& lowstar);

// Same with explicit per-column scales and dimensions (entries 1..m).
Barcode extract_pairs(const std::vector<double>& scales,
                      const std::vector<int>& dims, const LowVector& lowstar);

// Text format: `birth death dim` per line, death printed as `inf` for
// essential intervals.
void write_barcode(std::ostream& out, const Barcode& barcode);

}  // namespace ph
