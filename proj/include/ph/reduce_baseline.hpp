#pragma once

#include "ph/boundary.hpp"
#include "ph/metrics.hpp"

namespace ph {

// Standard left-to-right reduction. One trace row per outer-loop column.
// The inner search uses a pivot-by-row lookup; operation counts are
// unaffected. The matrix is reduced in place.
LowVector reduce_standard(BoundaryMatrix& matrix, TraceSink& trace);

// Standard reduction with clearing, sweeping dimensions descending from
// dim K to 1 and zeroing column low(j) after each nonzero reduction. Every
// visited column (already-zero ones included) counts as one iteration.
// Optional out-params record per-column additions received and cleared flags.
LowVector reduce_twist(BoundaryMatrix& matrix, TraceSink& trace,
                       std::vector<long long>* adds_into = nullptr,
                       std::vector<char>* cleared = nullptr);

}  // namespace ph
