#include "ph/reduce_baseline.hpp"

namespace ph {

namespace {

struct RowStats {
  long long col_adds_cum = 0;
  long long xor_ops_cum = 0;
  long long pivots = 0;
  long long cleared = 0;
};

TraceRow make_row(const char* algo, int iter, const TraceCounters& iter_counters,
                  const RowStats& stats, const ReductionMetrics& metrics) {
  TraceRow row;
  row.iter = iter;
  row.algo = algo;
  row.col_adds = iter_counters.col_adds;
  row.xor_ops = iter_counters.xor_ops;
  row.col_adds_cum = stats.col_adds_cum;
  row.xor_ops_cum = stats.xor_ops_cum;
  row.rel_l1_err = metrics.rel_l1_err();
  row.unreduced_frac = metrics.unreduced_frac();
  row.essential_precision = metrics.precision();
  row.pivots = stats.pivots;
  row.cleared = stats.cleared;
  return row;
}

}  // namespace

LowVector reduce_standard(BoundaryMatrix& matrix, TraceSink& trace) {
  const Index m = matrix.size();
  ReductionMetrics metrics(current_low(matrix), trace.reference());
  std::vector<Index> pivot_of_row(m + 1, 0);
  RowStats stats;
  int iter = 0;

  for (Index j = 1; j <= m; ++j) {
    TraceCounters counters;
    while (matrix.low(j) > 0 && pivot_of_row[matrix.low(j)] != 0) {
      const Index old_low = matrix.low(j);
      matrix.add_columns(pivot_of_row[old_low], j, counters);
      metrics.low_changed(j, old_low, matrix.low(j));
    }
    metrics.mark_resolved(j);
    if (matrix.low(j) > 0) {
      pivot_of_row[matrix.low(j)] = j;
      metrics.mark_paired(j);
      metrics.mark_paired(matrix.low(j));
      ++stats.pivots;
    }
    stats.col_adds_cum += counters.col_adds;
    stats.xor_ops_cum += counters.xor_ops;
    metrics.finish_iteration();
    trace.record(make_row("std", ++iter, counters, stats, metrics));
  }
  return current_low(matrix);
}

LowVector reduce_twist(BoundaryMatrix& matrix, TraceSink& trace,
                       std::vector<long long>* adds_into,
                       std::vector<char>* cleared) {
  const Index m = matrix.size();
  ReductionMetrics metrics(current_low(matrix), trace.reference());
  std::vector<Index> pivot_of_row(m + 1, 0);
  if (adds_into) adds_into->assign(m + 1, 0);
  if (cleared) cleared->assign(m + 1, 0);
  RowStats stats;
  int iter = 0;

  std::vector<std::vector<Index>> by_dim(matrix.max_dim() + 1);
  for (Index j = 1; j <= m; ++j) by_dim[matrix.dim(j)].push_back(j);

  for (int d = matrix.max_dim(); d >= 1; --d) {
    for (Index j : by_dim[d]) {
      TraceCounters counters;
      while (matrix.low(j) > 0 && pivot_of_row[matrix.low(j)] != 0) {
        const Index old_low = matrix.low(j);
        matrix.add_columns(pivot_of_row[old_low], j, counters);
        metrics.low_changed(j, old_low, matrix.low(j));
        if (adds_into) ++(*adds_into)[j];
      }
      metrics.mark_resolved(j);
      if (matrix.low(j) > 0) {
        const Index target = matrix.low(j);
        pivot_of_row[target] = j;
        metrics.mark_paired(j);
        metrics.mark_paired(target);
        ++stats.pivots;
        // Clearing: the paired positive column reduces to zero for free.
        if (!matrix.column(target).empty()) {
          const Index target_low = matrix.low(target);
          matrix.clear_column(target);
          metrics.low_changed(target, target_low, 0);
          if (cleared) (*cleared)[target] = 1;
          ++stats.cleared;
        }
      }
      stats.col_adds_cum += counters.col_adds;
      stats.xor_ops_cum += counters.xor_ops;
      metrics.finish_iteration();
      trace.record(make_row("twist", ++iter, counters, stats, metrics));
    }
  }
  return current_low(matrix);
}

}  // namespace ph
