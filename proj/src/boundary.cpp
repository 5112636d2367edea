#include "ph/boundary.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ph {

int BoundaryMatrix::max_dim() const {
  int d = 0;
  for (Index j = 1; j <= size(); ++j) d = std::max(d, dim_[j]);
  return d;
}

void BoundaryMatrix::set_column(Index j, std::vector<Index> rows) {
  if (j < 1 || j > size()) throw std::out_of_range("column index out of range");
  for (size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] < 1 || rows[k] >= j)
      throw std::invalid_argument("matrix not strictly upper-triangular at column " +
                                  std::to_string(j));
    if (k > 0 && rows[k] <= rows[k - 1])
      throw std::invalid_argument("column rows not strictly ascending at column " +
                                  std::to_string(j));
  }
  nnz_ += static_cast<long long>(rows.size()) -
          static_cast<long long>(cols_[j].size());
  cols_[j] = std::move(rows);
}

void BoundaryMatrix::add_columns(Index src, Index dst, TraceCounters& counters) {
  nnz_ += add_columns_exclusive(src, dst, counters);
}

long long BoundaryMatrix::add_columns_exclusive(Index src, Index dst,
                                                TraceCounters& counters) {
  if (src >= dst) throw std::invalid_argument("add_columns requires src < dst");
  const std::vector<Index>& a = cols_[src];
  std::vector<Index>& b = cols_[dst];

  counters.col_adds += 1;
  counters.xor_ops += static_cast<long long>(a.size() + b.size());

  std::vector<Index> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  const long long delta =
      static_cast<long long>(out.size()) - static_cast<long long>(b.size());
  b = std::move(out);
  return delta;
}

LowVector compute_leftcol(const BoundaryMatrix& matrix) {
  const Index m = matrix.size();
  LowVector leftcol(m + 1, 0);
  for (Index j = 1; j <= m; ++j)
    for (Index i : matrix.column(j))
      if (leftcol[i] == 0) leftcol[i] = j;
  return leftcol;
}

LowVector compute_beta(const BoundaryMatrix& matrix, long long* visit_count) {
  const Index m = matrix.size();
  LowVector beta(m + 1, 0);
  std::vector<char> visited(m + 1, 0);
  long long visits = 0;
  for (Index j = 1; j <= m; ++j) {
    for (Index i : matrix.column(j)) {
      ++visits;
      if (!visited[i]) {
        visited[i] = 1;
        beta[j] = std::max(beta[j], i);
      }
    }
  }
  if (visit_count) *visit_count = visits;
  return beta;
}

LowVector current_low(const BoundaryMatrix& matrix) {
  const Index m = matrix.size();
  LowVector low(m + 1, 0);
  for (Index j = 1; j <= m; ++j) low[j] = matrix.low(j);
  return low;
}

bool is_reduced(const LowVector& low) {
  std::vector<char> seen(low.size(), 0);
  for (size_t j = 1; j < low.size(); ++j) {
    if (low[j] == 0) continue;
    if (seen[low[j]]) return false;
    seen[low[j]] = 1;
  }
  return true;
}

bool is_reduced(const BoundaryMatrix& matrix) {
  return is_reduced(current_low(matrix));
}

void write_matrix(std::ostream& out, const BoundaryMatrix& matrix) {
  out << matrix.size() << "\n";
  for (Index j = 1; j <= matrix.size(); ++j) {
    const auto& col = matrix.column(j);
    if (col.empty()) continue;
    out << j << " " << matrix.dim(j);
    for (Index i : col) out << " " << i;
    out << "\n";
  }
}

BoundaryMatrix read_matrix(std::istream& in) {
  Index m = 0;
  if (!(in >> m) || m < 0) throw std::runtime_error("matrix file: bad size line");
  BoundaryMatrix matrix(m);
  std::string line;
  std::getline(in, line);  // rest of size line
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Index j = 0;
    int d = 0;
    if (!(ls >> j >> d)) throw std::runtime_error("matrix file: bad column line");
    std::vector<Index> rows;
    Index i;
    while (ls >> i) rows.push_back(i);
    matrix.set_dim(j, d);
    matrix.set_column(j, std::move(rows));
  }
  return matrix;
}

}  // namespace ph
