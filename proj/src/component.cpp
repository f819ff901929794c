#include "opkit/component.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace opkit {

int tree_degree_of(int n, int m) {
  if (n < 2 || m < 1 || (m - 1) % (n - 1) != 0) return -1;
  return (m - 1) / (n - 1);
}

Integer free_dimension(int n, int m) {
  const int k = tree_degree_of(n, m);
  if (k < 0) return 0;
  if (k == 0) return 1;
  return fuss_catalan(n, k) * factorial(m);
}

ComponentBasis::ComponentBasis(int generator_arity, int k, Level level)
    : n_(generator_arity), k_(k), m_(arity_of(generator_arity, k)), level_(level) {
  if (k < 1) throw std::invalid_argument("component basis needs at least one generator vertex");
  shapes_ = enumerate_shapes(n_, k_);
  for (std::size_t i = 0; i < shapes_.size(); ++i) shape_index_.emplace(shapes_[i].str(), static_cast<int>(i));
  Integer total = static_cast<unsigned long>(shapes_.size());
  if (level_ == Level::full) {
    const Integer f = factorial(m_);
    total *= f;
    block_ = f.get_ui();
  }
  if (total > std::numeric_limits<int>::max())
    throw ResourceLimitError("component of arity " + std::to_string(m_) + " has dimension " + total.get_str() +
                             ", too large to index");
  dim_ = static_cast<int>(total.get_si());
}

int ComponentBasis::index_of(const TreeMonomial& m) const {
  auto it = shape_index_.find(m.shape.str());
  if (it == shape_index_.end() || m.arity() != m_)
    throw std::invalid_argument("monomial " + m.to_string() + " is not in the arity-" + std::to_string(m_) +
                                " component");
  if (level_ == Level::shape) {
    if (!m.has_identity_labels())
      throw std::invalid_argument("shape-level basis expects identity labels, got " + m.to_string());
    return it->second;
  }
  return static_cast<int>(static_cast<std::uint64_t>(it->second) * block_ + lex_rank(m.labels));
}

TreeMonomial ComponentBasis::monomial_at(int index) const {
  if (index < 0 || index >= dim_) throw std::invalid_argument("basis index out of range");
  if (level_ == Level::shape) return TreeMonomial::identity_labeled(shapes_[static_cast<std::size_t>(index)]);
  const auto u = static_cast<std::uint64_t>(index);
  return TreeMonomial(shapes_[static_cast<std::size_t>(u / block_)], Permutation::unrank(m_, u % block_).images());
}

SparseVector ComponentBasis::to_vector(const Element& e) const {
  if (e.arity() != m_)
    throw std::invalid_argument("element of arity " + std::to_string(e.arity()) + " in arity-" +
                                std::to_string(m_) + " component");
  SparseVector v;
  v.reserve(e.size());
  for (const auto& [mono, c] : e.terms()) v.push_back({index_of(mono), c});
  std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  return v;
}

Element ComponentBasis::to_element(const SparseVector& v) const {
  Element e(m_);
  for (const auto& entry : v) e.add_term(monomial_at(entry.col), entry.value);
  return e;
}

std::vector<SparseVector> orbit_rows(const std::vector<Element>& generators, const ComponentBasis& basis,
                                     Exec exec) {
  if (basis.level() != Level::full) throw std::invalid_argument("orbit_rows needs a fully labeled basis");
  for (const auto& g : generators) (void)basis.to_vector(g);  // throws outside the parallel region
  const int m = basis.arity();
  const auto perms = all_permutations(m);
  const auto per = static_cast<std::ptrdiff_t>(perms.size());
  const auto total = per * static_cast<std::ptrdiff_t>(generators.size());
  std::vector<SparseVector> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const auto& g = generators[static_cast<std::size_t>(t / per)];
    rows[static_cast<std::size_t>(t)] = basis.to_vector(act(perms[static_cast<std::size_t>(t % per)], g));
  }
  return rows;
}

SpanBasis sigma_closure(const std::vector<Element>& generators, const ComponentBasis& basis, Exec exec) {
  return span_of(basis.dimension(), orbit_rows(generators, basis, exec), exec);
}

}  // namespace opkit
