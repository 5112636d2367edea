#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ph {

// Column/row indices are 1-based throughout; 0 is the "empty" sentinel.
using Index = int32_t;
using LowVector = std::vector<Index>;  // size m+1, entry [0] unused

struct TraceCounters {
  long long col_adds = 0;
  long long xor_ops = 0;
};

// Sparse GF(2) boundary matrix, column-major. Each column stores the row
// indices of its nonzeros sorted strictly ascending, so low() is the back
// of the list and column addition is a linear merge.
class BoundaryMatrix {
public:
  BoundaryMatrix() = default;
  explicit BoundaryMatrix(Index m) : cols_(m + 1), dim_(m + 1, 0) {}

  Index size() const { return static_cast<Index>(cols_.size()) - 1; }
  long long nnz() const { return nnz_; }

  const std::vector<Index>& column(Index j) const { return cols_[j]; }
  int dim(Index j) const { return dim_[j]; }
  void set_dim(Index j, int d) { dim_[j] = d; }
  int max_dim() const;

  // rows must be sorted strictly ascending with all entries < j.
  void set_column(Index j, std::vector<Index> rows);

  Index low(Index j) const {
    return cols_[j].empty() ? 0 : cols_[j].back();
  }

  void clear_column(Index j) {
    nnz_ -= static_cast<long long>(cols_[j].size());
    cols_[j].clear();
  }

  // dst <- dst + src over GF(2). Requires src < dst. The XOR counter grows
  // by |src| + |dst| measured before the addition: every scalar position
  // touched by either operand counts once per operand.
  void add_columns(Index src, Index dst, TraceCounters& counters);

  // Same addition but touching only the dst column, for concurrent workers
  // mutating disjoint columns. Returns the nnz delta to be applied at the
  // iteration barrier via apply_nnz_delta.
  long long add_columns_exclusive(Index src, Index dst, TraceCounters& counters);
  void apply_nnz_delta(long long delta) { nnz_ += delta; }

private:
  std::vector<std::vector<Index>> cols_;
  std::vector<int> dim_;
  long long nnz_ = 0;
};

// leftcol(i) = index of the leftmost column with a nonzero in row i, 0 if none.
LowVector compute_leftcol(const BoundaryMatrix& matrix);

// beta(j) = max{ i : leftcol(i) = j }, built in a single pass that marks
// first-visited rows. If visit_count is given it receives the number of
// nonzeros inspected (at most nnz).
LowVector compute_beta(const BoundaryMatrix& matrix,
                       long long* visit_count = nullptr);

LowVector current_low(const BoundaryMatrix& matrix);

// True iff low is injective over its support.
bool is_reduced(const LowVector& low);
bool is_reduced(const BoundaryMatrix& matrix);

// Text format: first line m; then `j d i1 i2 ... ik` per nonzero column,
// rows ascending. Empty columns are omitted and read back as dimension 0.
void write_matrix(std::ostream& out, const BoundaryMatrix& matrix);
BoundaryMatrix read_matrix(std::istream& in);

}  // namespace ph
