#include <doctest.h>

#include "oracle.hpp"
#include "ph/metrics.hpp"
#include "ph/reduce_baseline.hpp"

using namespace ph;

TEST_CASE("standard reduction on the cycle-and-fill fixture") {
  BoundaryMatrix matrix = oracle::t7_matrix();
  TraceSink trace;
  reduce_standard(matrix, trace);
  CHECK(current_low(matrix) == LowVector{0, 0, 0, 0, 2, 3, 0, 6});
  REQUIRE(trace.rows().size() == 7);
  CHECK(trace.rows().back().col_adds_cum == 2);  // both additions hit column 6
  CHECK(trace.rows()[5].col_adds == 2);
  CHECK(trace.rows().back().pivots == 3);
  CHECK(is_reduced(matrix));
}

TEST_CASE("twist reduction clears the filled cycle for free") {
  BoundaryMatrix matrix = oracle::t7_matrix();
  TraceSink trace;
  std::vector<long long> adds_into;
  std::vector<char> cleared;
  reduce_twist(matrix, trace, &adds_into, &cleared);
  CHECK(current_low(matrix) == LowVector{0, 0, 0, 0, 2, 3, 0, 6});
  CHECK(trace.rows().back().col_adds_cum == 0);
  long long total_into = 0;
  int cleared_count = 0;
  for (Index j = 1; j <= matrix.size(); ++j) {
    total_into += adds_into[j];
    cleared_count += cleared[j] ? 1 : 0;
  }
  CHECK(total_into == 0);
  CHECK(cleared_count == 1);  // column 6 is cleared when 7 reduces
  CHECK(cleared[6]);
  // dim-0 columns are never visited, so only four rows appear
  CHECK(trace.rows().size() == 4);
}

TEST_CASE("four-cycle fixture costs three additions either way") {
  SUBCASE("standard") {
    BoundaryMatrix matrix = oracle::s8_matrix();
    TraceSink trace;
    reduce_standard(matrix, trace);
    CHECK(current_low(matrix) == LowVector{0, 0, 0, 0, 0, 2, 3, 4, 0});
    CHECK(trace.rows()[7].col_adds == 3);
    CHECK(trace.rows().back().col_adds_cum == 3);
  }
  SUBCASE("twist") {
    BoundaryMatrix matrix = oracle::s8_matrix();
    TraceSink trace;
    reduce_twist(matrix, trace);
    CHECK(current_low(matrix) == LowVector{0, 0, 0, 0, 0, 2, 3, 4, 0});
    CHECK(trace.rows().back().col_adds_cum == 3);
  }
}

TEST_CASE("reducing an all-vertex matrix is a no-op") {
  BoundaryMatrix matrix(3);
  TraceSink trace;
  reduce_standard(matrix, trace);
  CHECK(matrix.nnz() == 0);
  CHECK(trace.rows().back().col_adds_cum == 0);
  BoundaryMatrix matrix2(3);
  TraceSink trace2;
  reduce_twist(matrix2, trace2);
  CHECK(trace2.rows().empty());
}

TEST_CASE("standard and twist agree with the quadratic reducer") {
  for (uint64_t trial = 0; trial < 40; ++trial) {
    const Filtration f = oracle::corpus_filtration(oracle::corpus_case(trial));
    const BoundaryMatrix original = boundary_matrix(f);
    const LowVector want = oracle::naive_lowstar(original);

    BoundaryMatrix a = original;
    TraceSink ta;
    reduce_standard(a, ta);
    CHECK(current_low(a) == want);
    CHECK(is_reduced(a));

    BoundaryMatrix b = original;
    TraceSink tb;
    reduce_twist(b, tb);
    CHECK(current_low(b) == want);
    CHECK(is_reduced(b));
  }
}

TEST_CASE("twist clears every destroyed creator below the top dimension") {
  for (uint64_t trial = 0; trial < 15; ++trial) {
    const Filtration f = oracle::corpus_filtration(oracle::corpus_case(trial));
    BoundaryMatrix matrix = boundary_matrix(f);
    const LowVector lowstar = oracle::naive_lowstar(matrix);
    std::vector<char> destroyed(matrix.size() + 1, 0);
    for (Index j = 1; j <= matrix.size(); ++j)
      if (lowstar[j] > 0) destroyed[lowstar[j]] = 1;

    const int top = matrix.max_dim();
    TraceSink trace;
    std::vector<long long> adds_into;
    std::vector<char> cleared;
    reduce_twist(matrix, trace, &adds_into, &cleared);
    for (Index j = 1; j <= matrix.size(); ++j) {
      if (destroyed[j] && matrix.dim(j) < top) {
        CHECK(matrix.low(j) == 0);
        CHECK(adds_into[j] == 0);  // cleared before anything lands on it
      }
    }
  }
}
