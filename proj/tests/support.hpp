// Independent oracles shared by the unit tests and the acceptance binary.
// Nothing here calls into the engine's elimination or series code.
#pragma once

#include "opkit/rational.hpp"
#include "opkit/presentation.hpp"
#include "opkit/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using opkit::Integer;
using opkit::Rational;

// Fraction-free Bareiss elimination on an integer copy of the matrix.
inline int bareiss_rank(const std::vector<std::vector<Rational>>& a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (const auto& q : a[r]) l = lcm(l, Integer(q.get_den()));
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = Integer(a[r][c] * l);
  }
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) m[r][j] = (m[rank][c] * m[r][j] - m[r][c] * m[rank][j]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

// Truncated power series as plain coefficient vectors a_0..a_N.
using Poly = std::vector<Rational>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// t with g(t) = x, from t <- x - sum_{d >= 2} a_d t^d (needs a_1 = 1).
inline Poly fixed_point_inverse(const Poly& g) {
  const std::size_t n = g.size();
  Poly t(n, 0);
  if (n > 1) t[1] = 1;
  for (std::size_t it = 0; it < n; ++it) {
    Poly next(n, 0);
    if (n > 1) next[1] = 1;
    Poly pw = t;
    for (std::size_t d = 2; d < n; ++d) {
      pw = mul(pw, t);
      for (std::size_t j = 0; j < n; ++j) next[j] -= g[d] * pw[j];
    }
    t = next;
  }
  return t;
}

// s with g(-s(-x)) = x.
inline Poly koszul_inverse(const Poly& g) {
  Poly t = fixed_point_inverse(g), s(t.size(), 0);
  for (std::size_t d = 0; d < t.size(); ++d) s[d] = d % 2 ? t[d] : Rational(-t[d]);
  return s;
}

// Planar binary trees with labelled leaves written out as strings, e.g.
// "((1 2) 3)"; used for a graft-free count of the associative ideal.
inline std::string bin(const std::string& a, const std::string& b) { return "(" + a + " " + b + ")"; }

inline std::vector<std::vector<int>> perms(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Random element of tree-degree k: 1..3 monomials with random shapes,
// labels and small integer coefficients.
inline opkit::Element random_element(std::mt19937& rng, int n, int k) {
  const auto shapes = opkit::enumerate_shapes(n, k);
  const int m = k * (n - 1) + 1;
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3), terms(1, 3);
  opkit::Element e(m);
  while (e.is_zero()) {
    for (int t = terms(rng); t > 0; --t) {
      std::vector<int> labels(static_cast<std::size_t>(m));
      std::iota(labels.begin(), labels.end(), 1);
      std::shuffle(labels.begin(), labels.end(), rng);
      e.add_term(opkit::TreeMonomial(shapes[pick(rng)], labels), coeff(rng));
    }
  }
  return e;
}

// Presentation with random name, arity, degree and 1..3 quadratic relations.
inline opkit::QuadraticPresentation random_presentation(std::mt19937& rng, int id) {
  std::uniform_int_distribution<int> ar(2, 4), deg(0, 1), nrel(1, 3), num(-9, 9), den(1, 5);
  opkit::QuadraticPresentation p;
  p.name = "P" + std::to_string(id);
  p.generator_name = id % 2 ? "mu" : "nu_" + std::to_string(id);
  p.generator = opkit::GeneratorSpec(ar(rng), deg(rng));
  for (int r = nrel(rng); r > 0; --r) {
    opkit::Element e = random_element(rng, p.generator.arity, 2);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (q != 0) e *= q;
    p.relations.push_back(e);
  }
  return p;
}

}  // namespace oracle
