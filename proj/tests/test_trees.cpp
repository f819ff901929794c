#include "opkit/trees.hpp"

#include "support.hpp"

#include <doctest.h>

#include <gmpxx.h>

using namespace opkit;

namespace {

TreeMonomial mono(std::string_view s) { return TreeMonomial::parse(s); }

int degree_of(const GeneratorSpec& g, const Element& e) { return g.degree * e.tree_degree(); }

}  // namespace

TEST_CASE("shape counts match the Fuss-Catalan closed form") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 6; ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n * k), static_cast<unsigned long>(k));
      const Integer closed = binom / ((n - 1) * k + 1);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(fuss_catalan(n, k) == closed);
      CHECK(Integer(static_cast<unsigned long>(enumerate_shapes(n, k).size())) == closed);
    }
  CHECK(enumerate_shapes(3, 3).size() == 12);
  CHECK(enumerate_shapes(3, 6).size() == 1428);
  CHECK_THROWS_AS(enumerate_shapes(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_shapes(1, 2), std::invalid_argument);
}

TEST_CASE("quintic ternary shapes in canonical order") {
  const auto s = enumerate_shapes(3, 2);
  REQUIRE(s.size() == 3);
  CHECK(s[0].str() == "((***)**)");
  CHECK(s[1].str() == "(*(***)*)");
  CHECK(s[2].str() == "(**(***))");
  for (const auto& t : s) {
    CHECK(t.leaf_count() == 5);
    CHECK(TreeShape::parse(t.str()) == t);
  }
}

TEST_CASE("monomial text form round-trips") {
  for (const char* text : {"(x1 (x2 x3 x4) x5)", "((x2 x1) x3)", "(x3 x1 (x5 x2 x4))", "f(x1 g(x2 x3))"}) {
    CHECK(mono(text).to_string() == text);
  }
  CHECK_THROWS(mono("(x1 x1 x2)"));
  CHECK_THROWS(mono("(x1 x2"));
}

TEST_CASE("generator spec rejects unsupported degrees and arities") {
  CHECK_THROWS_AS(GeneratorSpec(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSpec(3, 2), std::invalid_argument);
  CHECK_NOTHROW(GeneratorSpec(3, 1));
}

TEST_CASE("composition examples") {
  const GeneratorSpec g3(3, 0);
  const auto mu = Element::corolla(3);
  CHECK(compose_i(g3, mu, 2, mu) == Element::monomial(mono("(x1 (x2 x3 x4) x5)")));
  CHECK(compose_i(g3, mu, 1, mu) == Element::monomial(mono("((x1 x2 x3) x4 x5)")));

  // Unit axiom on both sides.
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto e = oracle::random_element(rng, 3, 2);
    for (int i = 1; i <= 5; ++i) CHECK(compose_i(g3, e, i, Element::identity()) == e);
    CHECK(compose_i(g3, Element::identity(), 1, e) == e);
  }
  CHECK_THROWS_AS(compose_i(g3, mu, 4, mu), std::invalid_argument);
  CHECK_THROWS_AS(compose_i(g3, mu, 0, mu), std::invalid_argument);
}

TEST_CASE("parallel composition picks up a sign for odd generators") {
  for (int d : {0, 1}) {
    const GeneratorSpec g(2, d);
    const auto mu = Element::corolla(2);
    const auto a = compose_i(g, compose_i(g, mu, 2, mu), 1, mu);  // fill slot 2 first
    const auto b = compose_i(g, compose_i(g, mu, 1, mu), 3, mu);  // fill slot 1 first
    REQUIRE(a.size() == 1);
    CHECK(a == (d ? -b : b));
  }
}

TEST_CASE("comp-i associativity on random elements") {
  std::mt19937 rng(2024);
  struct Case { int n, ka, kb, kc; };
  // Arities of the triple composite stay <= 7.
  const std::vector<Case> cases{{2, 1, 1, 1}, {2, 2, 1, 1}, {2, 1, 2, 2}, {2, 3, 2, 1}, {3, 1, 1, 1}, {4, 1, 1, 0}};
  for (const auto& cs : cases)
    for (int d : {0, 1}) {
      const GeneratorSpec g(cs.n, d);
      for (int t = 0; t < 100; ++t) {
        const auto a = oracle::random_element(rng, cs.n, cs.ka);
        const auto b = oracle::random_element(rng, cs.n, cs.kb);
        const auto c = cs.kc ? oracle::random_element(rng, cs.n, cs.kc) : Element::identity();
        const int la = a.arity(), mb = b.arity(), qc = c.arity();
        const int sign = (degree_of(g, b) * degree_of(g, c)) % 2 ? -1 : 1;
        for (int i = 1; i <= la; ++i)
          for (int j = 1; j <= la + mb - 1; ++j) {
            const auto lhs = compose_i(g, compose_i(g, a, i, b), j, c);
            Element rhs;
            if (j < i)
              rhs = Rational(sign) * compose_i(g, compose_i(g, a, j, c), i + qc - 1, b);
            else if (j <= i + mb - 1)
              rhs = compose_i(g, a, i, compose_i(g, b, j - i + 1, c));
            else
              rhs = Rational(sign) * compose_i(g, compose_i(g, a, j - mb + 1, c), i, b);
            CAPTURE(cs.n);
            CAPTURE(d);
            CAPTURE(i);
            CAPTURE(j);
            REQUIRE(lhs == rhs);
          }
      }
    }
}

TEST_CASE("tree degree is additive under composition") {
  std::mt19937 rng(5);
  const GeneratorSpec g(3, 1);
  for (int t = 0; t < 30; ++t) {
    const auto a = oracle::random_element(rng, 3, 1 + t % 2);
    const auto b = oracle::random_element(rng, 3, 1 + t % 3);
    const auto c = compose_i(g, a, 1 + t % a.arity(), b);
    if (!c.is_zero()) CHECK(c.tree_degree() == a.tree_degree() + b.tree_degree());
  }
}

TEST_CASE("symmetric group action") {
  const auto m = Element::monomial(mono("(x1 x2 x3)"));
  CHECK(act(Permutation::transposition(3, 1, 2), m) == Element::monomial(mono("(x2 x1 x3)")));
  CHECK_THROWS_AS(act(Permutation::identity(4), m), std::invalid_argument);

  std::mt19937 rng(7);
  const auto s3 = all_permutations(3);
  for (const auto& s : s3)
    for (const auto& t : s3) CHECK(act(t, act(s, m)) == act(s * t, m));

  for (int trial = 0; trial < 50; ++trial) {
    const auto e = oracle::random_element(rng, 3, 2);
    CHECK(act(Permutation::identity(5), e) == e);
    const auto s = Permutation::unrank(5, rng() % 120);
    const auto t = Permutation::unrank(5, rng() % 120);
    CHECK(act(t, act(s, e)) == act(s * t, e));
  }
}

TEST_CASE("relabelling the inner element is a block permutation") {
  std::mt19937 rng(99);
  for (int d : {0, 1}) {
    const GeneratorSpec g(3, d);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = oracle::random_element(rng, 3, 1);
      const auto b = oracle::random_element(rng, 3, 2);
      const int i = 1 + static_cast<int>(rng() % 3);
      const auto tau = Permutation::unrank(5, rng() % 120);
      std::vector<int> block(7);
      for (int l = 1; l <= 7; ++l) block[l - 1] = (l >= i && l < i + 5) ? i - 1 + tau(l - i + 1) : l;
      CHECK(compose_i(g, a, i, act(tau, b)) == act(Permutation(block), compose_i(g, a, i, b)));
    }
  }
}

TEST_CASE("element arithmetic drops zero terms") {
  const auto a = Element::monomial(mono("((x1 x2) x3)"));
  const auto b = Element::monomial(mono("(x1 (x2 x3))"));
  CHECK((a - a).is_zero());
  CHECK((a + b - b) == a);
  CHECK((Rational(2) * (a + b)) == a + a + b + b);
  CHECK_THROWS_AS(a + Element::corolla(2), std::invalid_argument);
}
