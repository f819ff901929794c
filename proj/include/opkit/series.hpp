#pragma once

// Truncated one-variable power series with exact rational coefficients.

#include "opkit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace opkit {

/// Coefficients a_0..a_N are known; everything above N is unknown.
class PowerSeries {
 public:
  explicit PowerSeries(int order = 0);
  /// coefficients[d] = a_d; the order is coefficients.size() - 1.
  explicit PowerSeries(std::vector<Rational> coefficients);

  /// The series x, known through `order`.
  static PowerSeries variable(int order);
  /// x/(1 - c x) = sum c^(d-1) x^d.
  /// x / (1 - ratio x) = x + ratio x^2 + ratio^2 x^3 + ...
  static PowerSeries geometric(const Rational& ratio, int order);

  int order() const { return static_cast<int>(a_.size()) - 1; }
  /// Zero above the known order is not implied; reading past it throws.
  const Rational& operator[](int degree) const;
  void set(int degree, const Rational& value);
  const std::vector<Rational>& coefficients() const { return a_; }

  PowerSeries truncated(int order) const;
  /// f(-x)
  PowerSeries negated_argument() const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator-(PowerSeries a) { return a *= -1; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// Agreement of coefficients 0..order.
  bool agrees_through(const PowerSeries& o, int order) const;

  /// "x - x^3 + x^5 + O(x^14)"
  std::string to_string() const;

 private:
  std::vector<Rational> a_;
};

/// f(g(x)); requires g(0) = 0. Known through min(order f, order g).
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// u with g(u(x)) = x; requires a_0 = 0 and a_1 != 0.
PowerSeries compositional_inverse(const PowerSeries& g);

/// The unique s with g(-s(-x)) = x through `order`; requires g = x + ...
PowerSeries solve_koszul_inverse(const PowerSeries& g, int order);

enum class Verdict { consistent, inconsistent };

struct KoszulReport {
  Verdict verdict = Verdict::consistent;
  int order = 0;
  PowerSeries s;       // solution of g_P(-s(-x)) = x
  PowerSeries g_dual;  // as supplied
  std::optional<int> mismatch_degree;
  Rational s_coefficient;
  Rational dual_coefficient;

  /// One-paragraph human-readable verdict.
  std::string summary() const;
};

/// Compares the Koszul inverse of g_p with g_dual through `order`. An
/// inconsistent report certifies that the operad is not Koszul; a
/// consistent one certifies nothing.
KoszulReport koszul_verdict(const PowerSeries& g_p, const PowerSeries& g_dual, int order);

}  // namespace opkit
