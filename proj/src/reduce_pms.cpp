#include "ph/reduce_pms.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <thread>

namespace ph {

namespace {

// Result of reducing one pivot's neighbourhood. Collected per scheduled
// entry so serial and threaded execution merge in the same order.
struct TaskResult {
  TraceCounters counters;
  long long nnz_delta = 0;
  std::vector<std::array<Index, 3>> low_events;  // column, old low, new low
  std::vector<Index> discoveries;                // new pivots, ascending
};

}  // namespace

ReductionState::ReductionState(BoundaryMatrix& matrix, const LowVector* reference)
    : matrix_(matrix),
      m_(matrix.size()),
      low_(current_low(matrix)),
      beta_(compute_beta(matrix)),
      pivot_(m_ + 1, 0),
      pivot_with_low_(m_ + 1, 0),
      pin_(m_ + 1, 0),
      cleared_(m_ + 1, 0),
      by_dim_(matrix.max_dim() + 1),
      metrics_(low_, reference) {
  for (Index j = 1; j <= m_; ++j) by_dim_[matrix_.dim(j)].push_back(j);
}

long long ReductionState::sum_low() const {
  long long s = 0;
  for (Index j = 1; j <= m_; ++j) s += low_[j];
  return s;
}

void ReductionState::clear_column(Index j) {
  if (matrix_.column(j).empty()) return;
  const Index old_low = low_[j];
  matrix_.clear_column(j);
  low_[j] = 0;
  metrics_.low_changed(j, old_low, 0);
  cleared_[j] = 1;
  ++cleared_count_;
}

void ReductionState::certify_pivot(Index j) {
  const Index target = low_[j];
  if (target <= 0) throw std::logic_error("certify_pivot on a zero column");
  if (pivot_with_low_[target] != 0)
    throw std::logic_error("two pivots share a low value");
  pivot_[j] = 1;
  ++pivot_count_;
  pivot_with_low_[target] = j;
  metrics_.mark_paired(j);
  metrics_.mark_paired(target);
  metrics_.mark_resolved(j);
}

void ReductionState::phase0() {
  for (Index j = 1; j <= m_; ++j)
    if (beta_[j] > 0) metrics_.mark_paired(j);  // negativity certificate
  for (Index j = 1; j <= m_; ++j) {
    if (beta_[j] > 0 && beta_[j] == low_[j]) {
      certify_pivot(j);
      clear_column(low_[j]);
    }
  }
}

int ReductionState::phase1() {
  int new_pivots = 0;
  std::vector<Index> seen_count(m_ + 1, 0);
  std::vector<Index> touched;
  for (size_t d = 1; d < by_dim_.size(); ++d) {
    Index lowerbound = 0;
    for (Index v : touched) seen_count[v] = 0;
    touched.clear();
    for (Index j : by_dim_[d]) {
      const Index v = low_[j];
      if (v == 0) continue;
      if (!pivot_[j] && v > lowerbound) {
        if (seen_count[v] == 0) {
          certify_pivot(j);
          ++new_pivots;
        } else {
          lowerbound = v;
        }
      }
      // Every nonzero low left of the walk participates in the
      // membership test, pivots included.
      if (seen_count[v]++ == 0) touched.push_back(v);
    }
  }
  return new_pivots;
}

int ReductionState::compress_clear() {
  int acted = 0;
  for (size_t d = 1; d < by_dim_.size(); ++d) {
    const std::vector<Index>& faces = d >= 2 ? by_dim_[d - 1] : by_dim_[0];
    for (Index j : by_dim_[d]) {
      if (pivot_[j] || low_[j] == 0 || pin_[j] != 0) continue;
      const bool zero_candidate = beta_[j] == 0;
      // Unpaired dim-(d-1) indices within [beta_j, low(j)], up to two.
      Index candidate = 0;
      int count = 0;
      auto first = std::lower_bound(faces.begin(), faces.end(),
                                    std::max<Index>(beta_[j], 1));
      for (auto it = first; it != faces.end() && *it <= low_[j]; ++it) {
        if (metrics_.is_paired(*it)) continue;
        candidate = *it;
        if (++count >= 2) break;
      }
      if (zero_candidate && count == 0) {
        clear_column(j);  // lowstar is 0: the column is positive
        ++acted;
      } else if (!zero_candidate && count == 1) {
        if (low_[j] == candidate) {
          certify_pivot(j);
          clear_column(candidate);
        } else {
          pin_[j] = candidate;
          metrics_.mark_paired(j);
          metrics_.mark_paired(candidate);
          clear_column(candidate);
        }
        ++acted;
      } else if (!zero_candidate && count == 0) {
        throw std::logic_error("compression candidate set is empty");
      }
    }
  }
  return acted;
}

std::vector<std::pair<Index, std::vector<Index>>> ReductionState::schedule(
    const PmsOptions& opts) const {
  // Bucket unresolved columns by the pivot owning their current low value.
  // Lowstar injectivity makes the neighbourhoods disjoint by construction.
  std::vector<std::pair<Index, std::vector<Index>>> buckets;
  std::vector<Index> slot_of(m_ + 1, 0);  // pivot -> slot+1
  for (Index col = 1; col <= m_; ++col) {
    if (pivot_[col] || low_[col] == 0) continue;
    const Index p = pivot_with_low_[low_[col]];
    if (p == 0) continue;
    if (p >= col) throw std::logic_error("neighbour left of its pivot");
    if (slot_of[p] == 0) {
      buckets.emplace_back(p, std::vector<Index>{});
      slot_of[p] = static_cast<Index>(buckets.size());
    }
    buckets[slot_of[p] - 1].second.push_back(col);
  }
  std::sort(buckets.begin(), buckets.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  switch (opts.policy) {
    case SchedulePolicy::All:
      break;
    case SchedulePolicy::BigNbhdFirst:
      std::stable_sort(buckets.begin(), buckets.end(),
                       [](const auto& a, const auto& b) {
                         return a.second.size() > b.second.size();
                       });
      break;
    case SchedulePolicy::NegFirst: {
      auto negatives = [this](const std::pair<Index, std::vector<Index>>& b) {
        size_t n = 0;
        for (Index col : b.second)
          if (beta_[col] > 0 || pin_[col] > 0) ++n;
        return n;
      };
      std::stable_sort(buckets.begin(), buckets.end(),
                       [&](const auto& a, const auto& b) {
                         return negatives(a) > negatives(b);
                       });
      break;
    }
    case SchedulePolicy::PersistenceFirst:
      throw std::invalid_argument("persistence-first policy is not implemented");
  }
  if (opts.processor_cap > 0 &&
      buckets.size() > static_cast<size_t>(opts.processor_cap))
    buckets.resize(opts.processor_cap);
  return buckets;
}

long long ReductionState::phase2(const PmsOptions& opts) {
  const auto scheduled = schedule(opts);
  if (scheduled.empty()) return 0;

  {
    std::vector<char> owned(m_ + 1, 0);
    for (const auto& [j0, nbhd] : scheduled)
      for (Index col : nbhd) {
        if (owned[col]) throw std::logic_error("neighbourhoods overlap");
        owned[col] = 1;
      }
  }

  std::vector<TaskResult> results(scheduled.size());
  auto run_task = [&](size_t t) {
    const Index j0 = scheduled[t].first;
    TaskResult& res = results[t];
    for (Index col : scheduled[t].second) {
      const Index old_low = matrix_.low(col);
      res.nnz_delta += matrix_.add_columns_exclusive(j0, col, res.counters);
      const Index new_low = matrix_.low(col);
      res.low_events.push_back({col, old_low, new_low});
      if (new_low > 0 && (new_low == beta_[col] || new_low == pin_[col]))
        res.discoveries.push_back(col);
    }
  };

  if (opts.workers <= 1) {
    for (size_t t = 0; t < scheduled.size(); ++t) run_task(t);
  } else {
    const size_t nthreads =
        std::min<size_t>(opts.workers, scheduled.size());
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (size_t w = 0; w < nthreads; ++w)
      pool.emplace_back([&, w] {
        for (size_t t = w; t < scheduled.size(); t += nthreads) run_task(t);
      });
    for (auto& th : pool) th.join();
  }

  // Iteration barrier: merge counters and low updates in schedule order,
  // then apply pivot discoveries and their clearing.
  long long additions = 0;
  for (const TaskResult& res : results) {
    counters_.col_adds += res.counters.col_adds;
    counters_.xor_ops += res.counters.xor_ops;
    additions += res.counters.col_adds;
    matrix_.apply_nnz_delta(res.nnz_delta);
    for (const auto& [col, old_low, new_low] : res.low_events) {
      low_[col] = new_low;
      metrics_.low_changed(col, old_low, new_low);
    }
  }
  for (const TaskResult& res : results) {
    for (Index col : res.discoveries) {
      certify_pivot(col);
      clear_column(low_[col]);
    }
  }
  return additions;
}

LowVector reduce_pms(BoundaryMatrix& matrix, const PmsOptions& opts,
                     TraceSink& trace, const IterationCallback& on_iteration) {
  ReductionState state(matrix, trace.reference());
  // Every addition strictly lowers a column's low, so the fixpoint test
  // always fires eventually; max_iter == 0 runs until it does.
  const int max_iter =
      opts.max_iter > 0 ? opts.max_iter : std::numeric_limits<int>::max();

  long long prev_adds = 0, prev_xors = 0;
  auto record = [&](int iter) {
    TraceRow row;
    row.iter = iter;
    row.algo = "pms";
    row.col_adds = state.counters().col_adds - prev_adds;
    row.xor_ops = state.counters().xor_ops - prev_xors;
    row.col_adds_cum = state.counters().col_adds;
    row.xor_ops_cum = state.counters().xor_ops;
    prev_adds = row.col_adds_cum;
    prev_xors = row.xor_ops_cum;
    const ReductionMetrics& metrics = state.metrics();
    row.rel_l1_err = metrics.rel_l1_err();
    row.unreduced_frac = metrics.unreduced_frac();
    row.essential_precision = metrics.precision();
    row.pivots = state.pivot_count();
    row.cleared = state.cleared_count();
    trace.record(std::move(row));
  };

  state.phase0();
  state.finish_iteration();
  record(0);
  if (on_iteration) on_iteration(state);

  for (int iter = 1; iter <= max_iter; ++iter) {
    const int new_pivots = state.phase1();
    const int compressed = opts.compress_clear ? state.compress_clear() : 0;
    const long long additions = state.phase2(opts);
    state.finish_iteration();
    if (new_pivots == 0 && compressed == 0 && additions == 0) break;  // fixpoint
    record(iter);
    if (on_iteration) on_iteration(state);
  }
  return state.low();
}

}  // namespace ph
