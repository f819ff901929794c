#pragma once

// Exact sparse linear algebra over Q.

#include "opkit/exec.hpp"
#include "opkit/rational.hpp"

#include <span>
#include <vector>

namespace opkit {

struct Entry {
  int col;
  Rational value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by column, no stored zeros.
using SparseVector = std::vector<Entry>;

/// v + a * w
SparseVector axpy(const SparseVector& v, const Rational& a, const SparseVector& w);
SparseVector from_dense(std::span<const Rational> dense);
std::vector<Rational> to_dense(const SparseVector& v, int dim);

class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols);
  SparseMatrix(int cols, std::vector<SparseVector> rows);

  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const SparseVector& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  const std::vector<SparseVector>& row_data() const { return rows_; }
  Rational at(int r, int c) const;
  void set(int r, int c, const Rational& v);
  std::size_t nonzeros() const;

  SparseMatrix transpose() const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int cols_;
  std::vector<SparseVector> rows_;
};

/// Row space in reduced row-echelon form. Rows are ordered by pivot column.
class SpanBasis {
 public:
  explicit SpanBasis(int ambient = 0) : ambient_(ambient), row_of_col_(static_cast<std::size_t>(ambient), -1) {}
  /// Rows must already be in reduced row-echelon form.
  SpanBasis(int ambient, std::vector<SparseVector> rref_rows);

  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  SparseMatrix as_matrix() const { return SparseMatrix(ambient_, rows_); }

  /// Residue of v modulo the span (zero iff v is a member).
  SparseVector reduce(const SparseVector& v) const;

  friend bool operator==(const SpanBasis& a, const SpanBasis& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  int ambient_;
  std::vector<SparseVector> rows_;
  std::vector<int> pivots_;
  std::vector<int> row_of_col_;  // -1 for non-pivot columns
};

struct RrefResult {
  SpanBasis basis;
  int rank;
};

/// Gauss-Jordan elimination; pivots by least column, ties by least row.
/// The forward phase runs the row updates of each pivot in parallel.
RrefResult rref(const SparseMatrix& m, Exec exec = Exec::parallel);

/// Serial reference: incremental insertion into a fully reduced basis.
RrefResult rref_reference(const SparseMatrix& m);

SpanBasis span_of(int ambient, std::vector<SparseVector> rows, Exec exec = Exec::parallel);

/// {w : v^T P w = 0 for all v in span}.
SpanBasis annihilator(const SpanBasis& span, const SparseMatrix& pairing, Exec exec = Exec::parallel);

/// Right kernel {w : M w = 0}.
SpanBasis kernel(const SparseMatrix& m, Exec exec = Exec::parallel);

bool member(std::span<const Rational> coordinates, const SpanBasis& s);
bool member(const SparseVector& v, int dim, const SpanBasis& s);

/// Sum of two subspaces of the same ambient space.
SpanBasis span_sum(const SpanBasis& a, const SpanBasis& b, Exec exec = Exec::parallel);

}  // namespace opkit
