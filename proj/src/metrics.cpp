#include "ph/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ph {

namespace {

void print_metric(std::ostream& out, double v) {
  if (std::isnan(v)) {
    out << "nan";
    return;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  out << buf;
}

}  // namespace

void TraceSink::write_csv(std::ostream& out) const {
  out << "# iteration = one cycle of the algorithm's outer-most loop; "
         "visited-but-unchanged columns count\n";
  out << "# xor_ops = |src| + |dst| scalar positions touched per column addition\n";
  out << "# unreduced = columns neither certified (pivot/zero) nor visited by "
         "the sequential sweep\n";
  out << "iter,algo,col_adds,xor_ops,col_adds_cum,xor_ops_cum,rel_l1_err,"
         "unreduced_frac,essential_precision,pivots,cleared\n";
  for (const TraceRow& r : rows_) {
    out << r.iter << "," << r.algo << "," << r.col_adds << "," << r.xor_ops
        << "," << r.col_adds_cum << "," << r.xor_ops_cum << ",";
    print_metric(out, r.rel_l1_err);
    out << ",";
    print_metric(out, r.unreduced_frac);
    out << ",";
    print_metric(out, r.essential_precision);
    out << "," << r.pivots << "," << r.cleared << "\n";
  }
}

double rel_l1_error(const LowVector& low, const LowVector& lowstar) {
  if (low.size() != lowstar.size())
    throw std::invalid_argument("rel_l1_error: size mismatch");
  long long num = 0, den = 0;
  for (size_t j = 1; j < low.size(); ++j) {
    num += std::llabs(static_cast<long long>(low[j]) - lowstar[j]);
    den += lowstar[j];
  }
  if (den == 0)
    return num == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(num) / static_cast<double>(den);
}

double unreduced_proportion(const std::vector<char>& resolved) {
  if (resolved.size() <= 1) return 0.0;  // entry [0] is the unused sentinel
  size_t unresolved = 0;
  for (size_t j = 1; j < resolved.size(); ++j)
    if (!resolved[j]) ++unresolved;
  return static_cast<double>(unresolved) /
         static_cast<double>(resolved.size() - 1);
}

double essential_precision(size_t estimate_size, size_t truth_size) {
  if (truth_size > estimate_size)
    throw std::invalid_argument("essential_precision: truth exceeds estimate");
  if (estimate_size == 0) return 1.0;
  return static_cast<double>(truth_size) / static_cast<double>(estimate_size);
}

ReductionMetrics::ReductionMetrics(const LowVector& initial_low,
                                   const LowVector* reference)
    : m_(static_cast<Index>(initial_low.size()) - 1),
      reference_(reference),
      low_count_(initial_low.size(), 0),
      paired_(initial_low.size(), 0),
      resolved_(initial_low.size(), 0) {
  for (Index j = 1; j <= m_; ++j) {
    if (initial_low[j] > 0) {
      ++low_count_[initial_low[j]];
    } else {
      resolved_[j] = 1;
      ++resolved_count_;
    }
    essential_.push_back(j);
  }
  if (reference_) {
    const LowVector& ref = *reference_;
    std::vector<char> in_image(ref.size(), 0);
    for (Index j = 1; j <= m_; ++j) {
      err_sum_ += std::llabs(static_cast<long long>(initial_low[j]) - ref[j]);
      ref_norm_ += ref[j];
      if (ref[j] > 0) in_image[ref[j]] = 1;
    }
    for (Index j = 1; j <= m_; ++j)
      if (ref[j] == 0 && !in_image[j]) ++truth_essential_;
  }
}

void ReductionMetrics::low_changed(Index j, Index old_low, Index new_low) {
  if (old_low > 0) --low_count_[old_low];
  if (new_low > 0) ++low_count_[new_low];
  if (new_low == 0) mark_resolved(j);
  if (reference_) {
    const Index ref = (*reference_)[j];
    err_sum_ -= std::llabs(static_cast<long long>(old_low) - ref);
    err_sum_ += std::llabs(static_cast<long long>(new_low) - ref);
  }
}

void ReductionMetrics::mark_paired(Index j) { paired_[j] = 1; }

void ReductionMetrics::mark_resolved(Index j) {
  if (!resolved_[j]) {
    resolved_[j] = 1;
    ++resolved_count_;
  }
}

void ReductionMetrics::finish_iteration() {
  size_t kept = 0;
  for (Index e : essential_)
    if (!paired_[e] && low_count_[e] == 0) essential_[kept++] = e;
  essential_.resize(kept);
}

double ReductionMetrics::rel_l1_err() const {
  if (!reference_) return std::numeric_limits<double>::quiet_NaN();
  if (ref_norm_ == 0)
    return err_sum_ == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(err_sum_) / static_cast<double>(ref_norm_);
}

double ReductionMetrics::precision() const {
  if (!reference_) return std::numeric_limits<double>::quiet_NaN();
  return essential_precision(essential_.size(),
                             static_cast<size_t>(truth_essential_));
}

}  // namespace ph
