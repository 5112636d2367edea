#pragma once

#include <functional>
#include <vector>

#include "ph/boundary.hpp"
#include "ph/metrics.hpp"

namespace ph {

enum class SchedulePolicy {
  All,               // every pivot with a nonempty neighbourhood
  BigNbhdFirst,      // largest |N(j)| first
  NegFirst,          // neighbourhoods with most known-negative columns first
  PersistenceFirst,  // application specific; not implemented
};

struct PmsOptions {
  int max_iter = 0;          // 0 = run until the fixpoint
  bool compress_clear = false;
  int processor_cap = 0;     // 0 = unbounded; else neighbourhoods per iteration
  SchedulePolicy policy = SchedulePolicy::All;
  int workers = 0;           // 0 = deterministic serial simulation
};

class ReductionState;
using IterationCallback = std::function<void(const ReductionState&)>;

// Shared state of the parallel multi-scale reduction. The phases can be
// driven individually (tests) or through reduce_pms.
class ReductionState {
public:
  ReductionState(BoundaryMatrix& matrix, const LowVector* reference = nullptr);

  // Seeds pivots where beta_j = low(j) > 0 and clears their paired columns.
  void phase0();

  // One local-injection sweep over every dimension; returns new pivot count.
  int phase1();

  // Candidate-interval clearing: columns with a singleton candidate set are
  // either cleared (candidate 0) or pinned/promoted (candidate i > 0).
  // Returns the number of columns cleared, pinned or promoted.
  int compress_clear();

  // One parallel column-reduction pass; returns additions performed. Pivot
  // discoveries and clearing take effect at the end of the pass.
  long long phase2(const PmsOptions& opts);

  void finish_iteration() { metrics_.finish_iteration(); }

  BoundaryMatrix& matrix() { return matrix_; }
  const BoundaryMatrix& matrix() const { return matrix_; }
  const LowVector& low() const { return low_; }
  const LowVector& beta() const { return beta_; }
  bool is_pivot(Index j) const { return pivot_[j] != 0; }
  long long pivot_count() const { return pivot_count_; }
  bool is_paired(Index j) const { return metrics_.is_paired(j); }
  bool was_cleared(Index j) const { return cleared_[j] != 0; }
  Index pin(Index j) const { return pin_[j]; }
  long long cleared_count() const { return cleared_count_; }
  long long sum_low() const;
  const std::vector<Index>& essential_estimate() const {
    return metrics_.essential_estimate();
  }
  const ReductionMetrics& metrics() const { return metrics_; }
  TraceCounters& counters() { return counters_; }

private:
  void certify_pivot(Index j);   // low(j) is final; pairs j with low(j)
  void clear_column(Index j);
  void apply_addition(Index src, Index dst, TraceCounters& counters);
  std::vector<std::pair<Index, std::vector<Index>>> schedule(
      const PmsOptions& opts) const;

  BoundaryMatrix& matrix_;
  Index m_;
  LowVector low_;
  LowVector beta_;
  std::vector<char> pivot_;
  std::vector<Index> pivot_with_low_;  // row value -> certified pivot column
  std::vector<Index> pin_;             // compression-certified lowstar target
  std::vector<char> cleared_;          // cleared without additions
  std::vector<std::vector<Index>> by_dim_;
  long long pivot_count_ = 0;
  long long cleared_count_ = 0;
  TraceCounters counters_;
  ReductionMetrics metrics_;
};

// Full driver: Phase 0 once, then (Phase I, optional compression clearing,
// Phase II, essential update, trace record) until no pivot is added and no
// addition is performed, or until max_iter. Returns the current low; check
// is_reduced() to distinguish fixpoint from an early-stopped partial result.
LowVector reduce_pms(BoundaryMatrix& matrix, const PmsOptions& opts,
                     TraceSink& trace,
                     const IterationCallback& on_iteration = nullptr);

}  // namespace ph
