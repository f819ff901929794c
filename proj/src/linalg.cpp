#include "opkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace opkit {

namespace {

// Bucket sizes below this are eliminated serially; thread start-up costs
// more than the row updates.
constexpr std::size_t kParallelRowThreshold = 32;

struct WorkRow {
  int id;
  SparseVector v;
};

void check_row(const SparseVector& v, int cols) {
  int prev = -1;
  for (const auto& e : v) {
    if (e.col <= prev || e.col >= cols) throw std::invalid_argument("sparse row has unsorted or out-of-range column");
    if (e.value == 0) throw std::invalid_argument("sparse row stores a zero");
    prev = e.col;
  }
}

void scale_to_monic(SparseVector& v) {
  if (v.empty() || v.front().value == 1) return;
  Rational inv = 1 / v.front().value;
  for (auto& e : v) e.value *= inv;
}

}  // namespace

SparseVector axpy(const SparseVector& v, const Rational& a, const SparseVector& w) {
  if (a == 0) return v;
  SparseVector out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].col < w[j].col)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].col < v[i].col) {
      out.push_back({w[j].col, a * w[j].value});
      ++j;
    } else {
      Rational s = v[i].value + a * w[j].value;
      if (s != 0) out.push_back({v[i].col, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector from_dense(std::span<const Rational> dense) {
  SparseVector v;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (dense[c] != 0) v.push_back({static_cast<int>(c), dense[c]});
  return v;
}

std::vector<Rational> to_dense(const SparseVector& v, int dim) {
  std::vector<Rational> d(static_cast<std::size_t>(dim));
  for (const auto& e : v) d[static_cast<std::size_t>(e.col)] = e.value;
  return d;
}

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseMatrix::SparseMatrix(int cols, std::vector<SparseVector> rows) : cols_(cols), rows_(std::move(rows)) {
  if (cols < 0) throw std::invalid_argument("negative matrix dimension");
  for (const auto& r : rows_) check_row(r, cols_);
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.rows_[static_cast<std::size_t>(i)].push_back({i, 1});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const int cols = dense.empty() ? 0 : static_cast<int>(dense.front().size());
  std::vector<SparseVector> rows;
  rows.reserve(dense.size());
  for (const auto& r : dense) {
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged dense matrix");
    rows.push_back(opkit::from_dense(r));
  }
  return SparseMatrix(cols, std::move(rows));
}

Rational SparseMatrix::at(int r, int c) const {
  const auto& row = rows_.at(static_cast<std::size_t>(r));
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, int col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : Rational(0);
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (c < 0 || c >= cols_) throw std::invalid_argument("column out of range");
  auto& row = rows_.at(static_cast<std::size_t>(r));
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, int col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (v == 0)
      row.erase(it);
    else
      it->value = v;
  } else if (v != 0) {
    row.insert(it, Entry{c, v});
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (int r = 0; r < rows(); ++r)
    for (const auto& e : rows_[static_cast<std::size_t>(r)]) t.rows_[static_cast<std::size_t>(e.col)].push_back({r, e.value});
  return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  std::vector<SparseVector> rows(static_cast<std::size_t>(a.rows()));
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < a.rows(); ++r) {
    SparseVector acc;
    for (const auto& e : a.row(r)) acc = axpy(acc, e.value, b.row(e.col));
    rows[static_cast<std::size_t>(r)] = std::move(acc);
  }
  return SparseMatrix(b.cols(), std::move(rows));
}

// ---------------------------------------------------------------------------

SpanBasis::SpanBasis(int ambient, std::vector<SparseVector> rows)
    : ambient_(ambient), rows_(std::move(rows)), row_of_col_(static_cast<std::size_t>(ambient), -1) {
  pivots_.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    check_row(row, ambient_);
    if (row.empty() || row.front().value != 1) throw std::invalid_argument("span row is not monic");
    const int p = row.front().col;
    if (!pivots_.empty() && p <= pivots_.back()) throw std::invalid_argument("span rows not ordered by pivot");
    pivots_.push_back(p);
    row_of_col_[static_cast<std::size_t>(p)] = static_cast<int>(r);
  }
}

SparseVector SpanBasis::reduce(const SparseVector& v) const {
  // Rows are fully reduced, so subtracting one never touches another pivot
  // column: the pivot coefficients of v can be read off once.
  SparseVector out = v;
  for (const auto& e : v) {
    if (e.col >= ambient_) throw std::invalid_argument("vector index outside ambient space");
    const int r = row_of_col_[static_cast<std::size_t>(e.col)];
    if (r >= 0) out = axpy(out, -e.value, rows_[static_cast<std::size_t>(r)]);
  }
  return out;
}

RrefResult rref(const SparseMatrix& m, Exec exec) {
  const int cols = m.cols();
  std::vector<std::vector<WorkRow>> buckets(static_cast<std::size_t>(cols));
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) buckets[static_cast<std::size_t>(m.row(r).front().col)].push_back({r, m.row(r)});

  std::vector<SparseVector> echelon;
  for (int c = 0; c < cols; ++c) {
    auto& bucket = buckets[static_cast<std::size_t>(c)];
    if (bucket.empty()) continue;
    std::sort(bucket.begin(), bucket.end(), [](const WorkRow& a, const WorkRow& b) { return a.id < b.id; });
    SparseVector pivot = std::move(bucket.front().v);
    scale_to_monic(pivot);
    const auto n = static_cast<std::ptrdiff_t>(bucket.size());
    const bool par = exec == Exec::parallel && bucket.size() > kParallelRowThreshold;
#pragma omp parallel for schedule(dynamic, 8) if (par)
    for (std::ptrdiff_t k = 1; k < n; ++k) {
      auto& row = bucket[static_cast<std::size_t>(k)].v;
      row = axpy(row, -row.front().value, pivot);
    }
    for (std::ptrdiff_t k = 1; k < n; ++k) {
      auto& w = bucket[static_cast<std::size_t>(k)];
      if (!w.v.empty()) buckets[static_cast<std::size_t>(w.v.front().col)].push_back(std::move(w));
    }
    std::vector<WorkRow>().swap(bucket);
    echelon.push_back(std::move(pivot));
  }

  // Back substitution, bottom up. Each row only needs the fully reduced rows
  // below it, read at the pivot columns it had on entry.
  std::vector<int> row_of_col(static_cast<std::size_t>(cols), -1);
  for (std::size_t r = 0; r < echelon.size(); ++r) row_of_col[static_cast<std::size_t>(echelon[r].front().col)] = static_cast<int>(r);
  for (std::size_t r = echelon.size(); r-- > 0;) {
    const SparseVector original = echelon[r];
    SparseVector acc = original;
    for (std::size_t k = 1; k < original.size(); ++k) {
      const int below = row_of_col[static_cast<std::size_t>(original[k].col)];
      if (below >= 0) acc = axpy(acc, -original[k].value, echelon[static_cast<std::size_t>(below)]);
    }
    echelon[r] = std::move(acc);
  }
  const int rank = static_cast<int>(echelon.size());
  return {SpanBasis(cols, std::move(echelon)), rank};
}

SpanBasis span_of(int ambient, std::vector<SparseVector> rows, Exec exec) {
  return rref(SparseMatrix(ambient, std::move(rows)), exec).basis;
}

SpanBasis kernel(const SparseMatrix& m, Exec exec) {
  const auto reduced = rref(m, exec).basis;
  const int cols = m.cols();
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int p : reduced.pivots()) is_pivot[static_cast<std::size_t>(p)] = 1;
  // free column f contributes e_f - sum_r R[r][f] e_{pivot(r)}
  std::vector<SparseVector> columns(static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < reduced.rows().size(); ++r) {
    const auto& row = reduced.rows()[r];
    for (std::size_t k = 1; k < row.size(); ++k)
      columns[static_cast<std::size_t>(row[k].col)].push_back({reduced.pivots()[r], -row[k].value});
  }
  std::vector<SparseVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    auto v = std::move(columns[static_cast<std::size_t>(f)]);
    v.push_back({f, 1});
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    basis.push_back(std::move(v));
  }
  return span_of(cols, std::move(basis), exec);
}

SpanBasis annihilator(const SpanBasis& span, const SparseMatrix& pairing, Exec exec) {
  if (pairing.rows() != pairing.cols())
    throw std::invalid_argument("pairing must be square, got " + std::to_string(pairing.rows()) + "x" +
                                std::to_string(pairing.cols()));
  if (pairing.rows() != span.ambient())
    throw std::invalid_argument("pairing dimension " + std::to_string(pairing.rows()) +
                                " does not match ambient dimension " + std::to_string(span.ambient()));
  return kernel(span.as_matrix() * pairing, exec);
}

bool member(const SparseVector& v, int dim, const SpanBasis& s) {
  if (dim != s.ambient())
    throw std::invalid_argument("vector of dimension " + std::to_string(dim) + " tested against span in dimension " +
                                std::to_string(s.ambient()));
  check_row(v, dim);
  return s.reduce(v).empty();
}

bool member(std::span<const Rational> coordinates, const SpanBasis& s) {
  return member(from_dense(coordinates), static_cast<int>(coordinates.size()), s);
}

SpanBasis span_sum(const SpanBasis& a, const SpanBasis& b, Exec exec) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("span_sum: ambient dimension mismatch");
  auto rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return span_of(a.ambient(), std::move(rows), exec);
}

}  // namespace opkit
