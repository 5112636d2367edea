#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ph/boundary.hpp"

namespace ph {

struct TraceRow {
  int iter = 0;
  std::string algo;
  long long col_adds = 0;
  long long xor_ops = 0;
  long long col_adds_cum = 0;
  long long xor_ops_cum = 0;
  double rel_l1_err = 0.0;         // NaN when no reference lowstar is known
  double unreduced_frac = 0.0;
  double essential_precision = 0.0;  // NaN when no reference lowstar is known
  long long pivots = 0;
  long long cleared = 0;
};

// Per-iteration trace of a reduction run. An optional reference lowstar
// (normally from the standard reduction) enables the error and precision
// columns.
class TraceSink {
public:
  void set_reference(const LowVector& lowstar) { reference_ = lowstar; }
  const LowVector* reference() const {
    return reference_.empty() ? nullptr : &reference_;
  }

  void record(TraceRow row) { rows_.push_back(std::move(row)); }
  const std::vector<TraceRow>& rows() const { return rows_; }

  void write_csv(std::ostream& out) const;

private:
  std::vector<TraceRow> rows_;
  LowVector reference_;
};

// ||low - lowstar||_1 / ||lowstar||_1. A zero denominator yields 0 when the
// vectors agree and +inf otherwise (complexes of isolated vertices).
double rel_l1_error(const LowVector& low, const LowVector& lowstar);

double unreduced_proportion(const std::vector<char>& resolved);

// |truth| / |estimate|; requires truth to be a subset of the estimate.
// Both empty yields 1.
double essential_precision(size_t estimate_size, size_t truth_size);

// Incremental bookkeeping shared by the reducers: l1 distance to the
// reference, current-low image counts, resolved-column count and the
// essential-simplices estimate E updated as
// E <- (E \ paired) \ { low(j) : j in [m] } at each iteration barrier.
class ReductionMetrics {
public:
  ReductionMetrics(const LowVector& initial_low, const LowVector* reference);

  // Call on every low change, clearing included. Columns reaching low 0
  // count as resolved automatically.
  void low_changed(Index j, Index old_low, Index new_low);
  void mark_paired(Index j);
  void mark_resolved(Index j);
  void finish_iteration();

  double rel_l1_err() const;
  double unreduced_frac() const {
    return 1.0 - static_cast<double>(resolved_count_) / static_cast<double>(m_);
  }
  double precision() const;
  long long essential_size() const {
    return static_cast<long long>(essential_.size());
  }
  const std::vector<Index>& essential_estimate() const { return essential_; }
  bool is_paired(Index j) const { return paired_[j] != 0; }
  bool is_resolved(Index j) const { return resolved_[j] != 0; }

private:
  Index m_;
  const LowVector* reference_;
  long long err_sum_ = 0;
  long long ref_norm_ = 0;
  long long truth_essential_ = 0;
  long long resolved_count_ = 0;
  std::vector<Index> low_count_;   // multiplicity of each value in current low
  std::vector<char> paired_;
  std::vector<char> resolved_;
  std::vector<Index> essential_;   // current E, ascending
};

}  // namespace ph
