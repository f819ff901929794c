#include "opkit/dual.hpp"

#include <stdexcept>

namespace opkit {

GeneratorSpec czech_dual_generator(const GeneratorSpec& g) {
  const int degree = g.degree == 0 ? g.arity % 2 : 0;
  return GeneratorSpec(g.arity, degree, g.symmetry);
}

namespace {

int shape_sign(int shape_index) { return shape_index % 2 == 0 ? 1 : -1; }

// S-generators of a S-stable span, each straightened to identity labels
// where possible.
std::vector<Element> sigma_generators(const SpanBasis& span, const ComponentBasis& basis, Exec exec) {
  std::vector<Element> kept;
  SpanBasis closure(span.ambient());
  for (const auto& row : span.rows()) {
    if (closure.rank() == span.rank()) break;
    if (closure.reduce(row).empty()) continue;
    kept.push_back(straighten(basis.to_element(row)));
    closure = sigma_closure(kept, basis, exec);
  }
  return kept;
}

}  // namespace

PairingForm pairing(const GeneratorSpec& gen) {
  const ComponentBasis basis(gen.arity, 2, Level::full);
  const auto block = static_cast<int>(factorial(basis.arity()).get_si());
  const auto perms = all_permutations(basis.arity());
  PairingForm p(basis.dimension(), basis.dimension());
  for (int s = 0; s < static_cast<int>(basis.shapes().size()); ++s)
    for (int r = 0; r < block; ++r) {
      const int idx = s * block + r;
      p.set(idx, idx, shape_sign(s) * perms[static_cast<std::size_t>(r)].sign());
    }
  return p;
}

QuadraticPresentation dual_presentation(const QuadraticPresentation& p, const ComputeOptions& opts,
                                        DualGrading grading) {
  p.validate();
  QuadraticPresentation d;
  d.name = p.name + "_dual";
  d.generator_name = p.generator_name + "_dual";
  d.generator = czech_dual_generator(p.generator);
  if (grading == DualGrading::nongraded) d.generator.degree = 0;

  const int n = p.generator.arity;
  if (free_dimension(n, 2 * n - 1) <= opts.bound) {
    const ComponentBasis basis(n, 2, Level::full);
    const auto perp = annihilator(relation_module(p, opts), pairing(p.generator), opts.exec);
    d.relations = sigma_generators(perp, basis, opts.exec);
    return d;
  }
  if (!p.is_regular())
    throw ResourceLimitError("dual of " + p.name + " needs the full component of dimension " +
                             free_dimension(n, 2 * n - 1).get_str() + " (bound " + std::to_string(opts.bound) + ")");
  const ComponentBasis basis(n, 2, Level::shape);
  std::vector<SparseVector> rows;
  for (const auto& r : p.relations) rows.push_back(basis.to_vector(straighten(r)));
  PairingForm eps(basis.dimension(), basis.dimension());
  for (int s = 0; s < basis.dimension(); ++s) eps.set(s, s, shape_sign(s));
  const auto perp = annihilator(span_of(basis.dimension(), std::move(rows), opts.exec), eps, opts.exec);
  for (const auto& row : perp.rows()) d.relations.push_back(straighten(basis.to_element(row)));
  return d;
}

OperadDims dual_dims(const QuadraticPresentation& p, int max_k, const ComputeOptions& opts) {
  const auto d = dual_presentation(p, opts);
  return operad_dims(d, arity_of(p.generator.arity, max_k), DimsMode::mixed, opts);
}

KoszulAnalysis analyze_koszul(const QuadraticPresentation& p, int order, const ComputeOptions& opts,
                              DualGrading grading) {
  if (order < 1) throw std::invalid_argument("Koszul analysis needs a positive order");
  KoszulAnalysis a;
  a.dual = dual_presentation(p, opts, grading);
  a.dims = operad_dims(p, order, DimsMode::mixed, opts);
  a.dual_dims = operad_dims(a.dual, order, DimsMode::mixed, opts);
  a.g = generating_function(p, a.dims, order);
  a.g_dual = generating_function(a.dual, a.dual_dims, order);
  a.report = koszul_verdict(a.g, a.g_dual, order);
  return a;
}

}  // namespace opkit
