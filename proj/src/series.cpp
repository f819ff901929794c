#include "opkit/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace opkit {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  a_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : a_(std::move(coefficients)) {
  if (a_.empty()) a_.emplace_back(0);
}

PowerSeries PowerSeries::variable(int order) {
  PowerSeries s(order);
  if (order >= 1) s.a_[1] = 1;
  return s;
}

PowerSeries PowerSeries::geometric(const Rational& ratio, int order) {
  PowerSeries s(order);
  Rational c = 1;
  for (int d = 1; d <= order; ++d) {
    s.a_[static_cast<std::size_t>(d)] = c;
    c *= ratio;
  }
  return s;
}

const Rational& PowerSeries::operator[](int degree) const {
  if (degree < 0 || degree > order())
    throw std::out_of_range("coefficient of x^" + std::to_string(degree) + " beyond known order " +
                            std::to_string(order()));
  return a_[static_cast<std::size_t>(degree)];
}

void PowerSeries::set(int degree, const Rational& value) {
  if (degree < 0 || degree > order()) throw std::out_of_range("coefficient index beyond order");
  a_[static_cast<std::size_t>(degree)] = value;
}

PowerSeries PowerSeries::truncated(int n) const {
  if (n > order()) throw std::invalid_argument("cannot extend a series past its known order");
  return PowerSeries(std::vector<Rational>(a_.begin(), a_.begin() + n + 1));
}

PowerSeries PowerSeries::negated_argument() const {
  PowerSeries s = *this;
  for (std::size_t d = 1; d < s.a_.size(); d += 2) s.a_[d] = -s.a_[d];
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  const int n = std::min(order(), o.order());
  a_.resize(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) a_[static_cast<std::size_t>(d)] += o.a_[static_cast<std::size_t>(d)];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  const int n = std::min(order(), o.order());
  a_.resize(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) a_[static_cast<std::size_t>(d)] -= o.a_[static_cast<std::size_t>(d)];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& v : a_) v *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.a_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      out.a_[static_cast<std::size_t>(i + j)] += a.a_[static_cast<std::size_t>(i)] * b.a_[static_cast<std::size_t>(j)];
  }
  return out;
}

bool PowerSeries::agrees_through(const PowerSeries& o, int n) const {
  if (n > order() || n > o.order()) throw std::invalid_argument("comparison beyond known order");
  return std::equal(a_.begin(), a_.begin() + n + 1, o.a_.begin());
}

std::string PowerSeries::to_string() const {
  std::string out;
  for (int d = 0; d <= order(); ++d) {
    const auto& c = a_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational mag = abs(c);
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
    if (mag != 1 || d == 0) out += to_short_string(mag);
    out += mono;
  }
  const std::string tail = "O(x^" + std::to_string(order() + 1) + ")";
  return out.empty() ? tail : out + " + " + tail;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (g[0] != 0) throw std::invalid_argument("compose: inner series must have zero constant term");
  const int n = std::min(f.order(), g.order());
  // Horner: f_n, then r <- r*g + f_d
  PowerSeries r(n);
  for (int d = n; d >= 0; --d) {
    r = r * g.truncated(n);
    r.set(0, r[0] + f[d]);
  }
  return r;
}

PowerSeries compositional_inverse(const PowerSeries& g) {
  if (g.order() < 1) throw std::invalid_argument("compositional inverse needs order >= 1");
  if (g[0] != 0) throw std::invalid_argument("compositional inverse needs zero constant term");
  if (g[1] == 0) throw std::invalid_argument("compositional inverse needs a nonzero linear term");
  const int n = g.order();
  PowerSeries u(n);
  u.set(1, 1 / g[1]);
  // [x^d] g(u) = g_1 u_d + (terms in u_1..u_{d-1}); solve for u_d.
  for (int d = 2; d <= n; ++d) {
    const auto partial = compose(g.truncated(d), u.truncated(d));
    u.set(d, -partial[d] / g[1]);
  }
  return u;
}

PowerSeries solve_koszul_inverse(const PowerSeries& g, int order) {
  if (order < 1) throw std::invalid_argument("solve_koszul_inverse: order must be positive");
  if (order > g.order())
    throw std::invalid_argument("solve_koszul_inverse: order " + std::to_string(order) + " exceeds the series order " +
                                std::to_string(g.order()));
  if (g[0] != 0 || g[1] != 1) throw std::invalid_argument("solve_koszul_inverse: series must begin with x");
  // u = -s(-x) is the compositional inverse of g.
  const auto u = compositional_inverse(g.truncated(order));
  return -u.negated_argument();
}

std::string KoszulReport::summary() const {
  if (verdict == Verdict::consistent)
    return "CONSISTENT through order " + std::to_string(order) +
           ": the Koszul inverse agrees with the dual generating function (necessary condition only; "
           "Koszulity is not certified)";
  return "INCONSISTENT at degree " + std::to_string(*mismatch_degree) + ": Koszul inverse has " +
         to_short_string(s_coefficient) + ", dual generating function has " + to_short_string(dual_coefficient) +
         " (g_P(-g_dual(-x)) = x fails, so these cannot be the series of a Koszul operad and its dual)";
}

KoszulReport koszul_verdict(const PowerSeries& g_p, const PowerSeries& g_dual, int order) {
  for (const auto* g : {&g_p, &g_dual})
    if (g->order() < 1 || (*g)[0] != 0 || (*g)[1] != 1)
      throw std::invalid_argument("koszul_verdict: both series must begin with x");
  if (order > g_dual.order())
    throw std::invalid_argument("koszul_verdict: order exceeds the dual series order");
  KoszulReport r;
  r.order = order;
  r.s = solve_koszul_inverse(g_p, order);
  r.g_dual = g_dual;
  for (int d = 1; d <= order; ++d) {
    if (r.s[d] != g_dual[d]) {
      r.verdict = Verdict::inconsistent;
      r.mismatch_degree = d;
      r.s_coefficient = r.s[d];
      r.dual_coefficient = g_dual[d];
      break;
    }
  }
  return r;
}

}  // namespace opkit
