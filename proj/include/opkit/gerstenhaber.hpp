#pragma once

// Gerstenhaber circle product on symbolic multilinear cochains. A cochain
// is an Element whose vertices may carry operation symbols as tags.

#include "opkit/trees.hpp"

#include <string_view>

namespace opkit {

/// The single operation `symbol` applied to x1..x_arity. An empty symbol
/// gives the untagged generator vertex.
Element cochain(std::string_view symbol, int arity);

/// f o_{n,m} g = sum_{i=1..n} (-1)^((i-1)(m-1)) f o_i g.
Element circle(const Element& f, const Element& g);

/// circle(mu, mu) for the generator vertex; the partial associativity
/// relation in arity 2n-1.
Element partial_assoc_defect(const GeneratorSpec& gen);

}  // namespace opkit
