#include "opkit/gerstenhaber.hpp"

#include <stdexcept>

namespace opkit {

Element cochain(std::string_view symbol, int arity) {
  if (arity < 1) throw std::invalid_argument("cochain arity must be positive");
  return Element::monomial(TreeMonomial::identity_labeled(TreeShape::corolla(arity, symbol)));
}

Element circle(const Element& f, const Element& g) {
  const int n = f.arity(), m = g.arity();
  Element out(n + m - 1);
  for (int i = 1; i <= n; ++i) {
    auto term = graft(f, i, g, 0);
    if (((i - 1) * (m - 1)) % 2) term *= -1;
    out += term;
  }
  return out;
}

Element partial_assoc_defect(const GeneratorSpec& gen) {
  const auto mu = Element::corolla(gen.arity);
  return circle(mu, mu);
}

}  // namespace opkit
