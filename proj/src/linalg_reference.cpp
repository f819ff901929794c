// Serial reference elimination, kept as an independent route for testing
// and benchmarking the OpenMP kernel in linalg.cpp.

#include "opkit/linalg.hpp"

#include <algorithm>

namespace opkit {

RrefResult rref_reference(const SparseMatrix& m) {
  const int cols = m.cols();
  std::vector<SparseVector> basis;  // fully reduced, sorted by pivot
  std::vector<int> row_of_col(static_cast<std::size_t>(cols), -1);

  for (int r = 0; r < m.rows(); ++r) {
    SparseVector v = m.row(r);
    for (const auto& e : m.row(r)) {
      const int k = row_of_col[static_cast<std::size_t>(e.col)];
      if (k >= 0) v = axpy(v, -e.value, basis[static_cast<std::size_t>(k)]);
    }
    if (v.empty()) continue;
    const Rational lead = v.front().value;
    for (auto& e : v) e.value /= lead;
    const int p = v.front().col;
    for (auto& row : basis) {
      auto it = std::lower_bound(row.begin(), row.end(), p, [](const Entry& e, int c) { return e.col < c; });
      if (it != row.end() && it->col == p) row = axpy(row, -it->value, v);
    }
    auto pos = std::lower_bound(basis.begin(), basis.end(), p,
                                [](const SparseVector& row, int c) { return row.front().col < c; });
    basis.insert(pos, std::move(v));
    std::fill(row_of_col.begin(), row_of_col.end(), -1);
    for (std::size_t k = 0; k < basis.size(); ++k) row_of_col[static_cast<std::size_t>(basis[k].front().col)] = static_cast<int>(k);
  }
  const int rank = static_cast<int>(basis.size());
  return {SpanBasis(cols, std::move(basis)), rank};
}

}  // namespace opkit
