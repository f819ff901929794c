#pragma once

// Tree monomials of the free operad on one n-ary generator.
//
// A shape is stored as its canonical serialization: internal vertices are
// parenthesized, leaves are '*', children left to right. A vertex may carry
// an identifier tag in front of its '(' ("f(*g(**))"); tags are only used
// for Gerstenhaber cochains with several operation symbols. Untagged shapes
// sort with '(' before '*', so the three quadratic ternary shapes come out
// as ((***)**) < (*(***)*) < (**(***)), i.e. mu o_1 mu, mu o_2 mu, mu o_3 mu.

#include "opkit/permutation.hpp"
#include "opkit/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace opkit {

enum class Symmetry { regular };

/// One graded generator. Only the regular representation and degrees 0 and 1
/// are supported.
struct GeneratorSpec {
  int arity = 2;
  int degree = 0;
  Symmetry symmetry = Symmetry::regular;

  GeneratorSpec() = default;
  GeneratorSpec(int arity, int degree, Symmetry symmetry = Symmetry::regular);

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

class TreeShape {
 public:
  /// The bare leaf (operadic unit, no internal vertex).
  TreeShape();

  static TreeShape leaf() { return {}; }
  static TreeShape corolla(int arity, std::string_view tag = {});
  /// Validates and wraps a canonical serialization.
  static TreeShape parse(std::string_view serialization);

  const std::string& str() const { return s_; }
  int leaf_count() const { return leaves_; }
  int vertex_count() const { return vertices_; }
  /// Every internal vertex has exactly n children and none is tagged.
  bool is_uniform(int n) const;

  /// Offset of the p-th leaf (0-based, left to right) in str().
  std::size_t leaf_offset(int p) const;
  /// Number of internal vertices after the p-th leaf in preorder.
  int vertices_after_leaf(int p) const;
  /// Replaces the p-th leaf by `sub`.
  TreeShape graft(int p, const TreeShape& sub) const;

  friend bool operator==(const TreeShape& a, const TreeShape& b) { return a.s_ == b.s_; }
  friend std::strong_ordering operator<=>(const TreeShape& a, const TreeShape& b) { return a.s_ <=> b.s_; }

 private:
  TreeShape(std::string s, int leaves, int vertices) : s_(std::move(s)), leaves_(leaves), vertices_(vertices) {}

  std::string s_;
  int leaves_ = 1;
  int vertices_ = 0;
};

/// Leaf-labeled planar tree; labels[p] is the input index read at leaf p.
struct TreeMonomial {
  TreeShape shape;
  std::vector<int> labels;

  TreeMonomial() : labels{1} {}
  TreeMonomial(TreeShape shape, std::vector<int> labels);
  /// Shape with labels 1..m left to right.
  static TreeMonomial identity_labeled(TreeShape shape);

  int arity() const { return shape.leaf_count(); }
  int vertex_count() const { return shape.vertex_count(); }
  bool has_identity_labels() const;

  /// Text form, e.g. "(x1 (x2 x3 x4) x5)" or "f(x1 g(x2 x3))".
  std::string to_string() const;
  /// Inverse of to_string.
  static TreeMonomial parse(std::string_view text);

  friend bool operator==(const TreeMonomial&, const TreeMonomial&) = default;
  friend std::strong_ordering operator<=>(const TreeMonomial& a, const TreeMonomial& b) {
    if (auto c = a.shape <=> b.shape; c != 0) return c;
    return a.labels <=> b.labels;
  }
};

/// Finite Q-linear combination of tree monomials of one arity.
class Element {
 public:
  using Terms = std::map<TreeMonomial, Rational>;

  explicit Element(int arity = 1);
  static Element monomial(TreeMonomial m, const Rational& c = 1);
  /// Single generator vertex with identity labels.
  static Element corolla(int arity);
  static Element identity() { return monomial(TreeMonomial{}); }

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const TreeMonomial& m) const;

  void add_term(const TreeMonomial& m, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator-(Element a) { return a *= -1; }
  friend bool operator==(const Element&, const Element&) = default;

  /// Largest vertex count over the terms (tree-degree of a homogeneous element).
  int tree_degree() const;
  std::string to_string() const;

 private:
  int arity_;
  Terms terms_;
};

/// Fuss-Catalan number C(nk, k) / ((n-1)k + 1).
Integer fuss_catalan(int n, int k);

/// All planar trees with k internal n-ary vertices, in canonical order.
std::vector<TreeShape> enumerate_shapes(int arity, int k);

/// Grafts b into the input of a labeled i, with relabeling. Each internal
/// vertex has homological degree `vertex_degree`; the Koszul sign is
/// (-1)^(|b| * w) where w is the degree of the vertices of a that follow
/// the grafted leaf in preorder.
Element graft(const Element& a, int i, const Element& b, int vertex_degree);

/// Operadic composition a o_i b in the free operad on `gen`.
Element compose_i(const GeneratorSpec& gen, const Element& a, int i, const Element& b);

/// Right action on leaf labels: label l becomes sigma(l).
Element act(const Permutation& sigma, const Element& e);
TreeMonomial act(const Permutation& sigma, const TreeMonomial& m);

/// Same shapes with identity labels, coefficients summed (the one-variable
/// image of an element).
Element collapse_labels(const Element& e);

}  // namespace opkit
