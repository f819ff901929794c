#pragma once

// Coordinates on one arity component of the free operad F(E)(m),
// m = k(n-1)+1, either fully labeled or at shape level.

#include "opkit/exec.hpp"
#include "opkit/linalg.hpp"
#include "opkit/trees.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace opkit {

enum class Level { full, shape };

/// Thrown when a full multilinear computation would exceed the configured
/// dimension bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis of F(E)(m). Full level: index = shape_index * m! + lex_rank(labels).
/// Shape level: index = shape_index, monomials carry identity labels.
class ComponentBasis {
 public:
  ComponentBasis(int generator_arity, int k, Level level);

  int generator_arity() const { return n_; }
  int tree_degree() const { return k_; }
  int arity() const { return m_; }
  Level level() const { return level_; }
  int dimension() const { return dim_; }
  const std::vector<TreeShape>& shapes() const { return shapes_; }

  int index_of(const TreeMonomial& m) const;
  TreeMonomial monomial_at(int index) const;

  SparseVector to_vector(const Element& e) const;
  Element to_element(const SparseVector& v) const;

 private:
  int n_, k_, m_;
  Level level_;
  std::vector<TreeShape> shapes_;
  std::unordered_map<std::string, int> shape_index_;
  std::uint64_t block_ = 1;
  int dim_ = 0;
};

/// Arity of the component with k generator vertices.
inline int arity_of(int n, int k) { return k * (n - 1) + 1; }
/// k with arity_of(n, k) == m, or -1 when m is not of that form.
int tree_degree_of(int n, int m);

/// dim F(E)(m) = |shapes(n,k)| * m! for the regular generator.
Integer free_dimension(int n, int m);

/// Span of { sigma . g : g in generators, sigma in S_m } in full coordinates.
SpanBasis sigma_closure(const std::vector<Element>& generators, const ComponentBasis& basis,
                        Exec exec = Exec::parallel);

/// Rows act(sigma, g) for all sigma, in (generator, lex rank) order; the
/// orbit-expansion kernel behind sigma_closure.
std::vector<SparseVector> orbit_rows(const std::vector<Element>& generators, const ComponentBasis& basis,
                                     Exec exec = Exec::parallel);

}  // namespace opkit
