#include "opkit/presentation.hpp"

#include "opkit/gerstenhaber.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>
#include <string>

namespace opkit {

void QuadraticPresentation::validate() const {
  const int n = generator.arity;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& rel = relations[r];
    const auto where = "relation " + std::to_string(r + 1) + " of " + name;
    if (rel.is_zero()) throw std::invalid_argument(where + " is zero");
    if (rel.arity() != 2 * n - 1)
      throw std::invalid_argument(where + " has arity " + std::to_string(rel.arity()) + ", expected " +
                                  std::to_string(2 * n - 1));
    for (const auto& [m, c] : rel.terms()) {
      if (!m.shape.is_uniform(n)) throw std::invalid_argument(where + ": " + m.to_string() + " is not built from " +
                                                               std::to_string(n) + "-ary vertices");
      if (m.vertex_count() != 2) throw std::invalid_argument(where + ": " + m.to_string() + " is not quadratic");
    }
  }
}

bool QuadraticPresentation::is_regular() const {
  return std::all_of(relations.begin(), relations.end(), [](const Element& e) {
    if (e.is_zero()) return true;
    const auto& first = e.terms().begin()->first.labels;
    return std::all_of(e.terms().begin(), e.terms().end(), [&](const auto& t) { return t.first.labels == first; });
  });
}

Element straighten(const Element& relation) {
  if (relation.is_zero()) return relation;
  const auto& labels = relation.terms().begin()->first.labels;
  Element out = relation;
  const bool uniform = std::all_of(relation.terms().begin(), relation.terms().end(),
                                   [&](const auto& t) { return t.first.labels == labels; });
  if (uniform) out = act(Permutation(labels).inverse(), relation);
  out *= 1 / out.terms().begin()->second;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

QuadraticPresentation partially_associative(int n) {
  QuadraticPresentation p;
  p.generator = GeneratorSpec(n, 0);
  p.name = n == 2 ? "Ass" : std::to_string(n) + "Ass";
  p.relations.push_back(partial_assoc_defect(p.generator));
  return p;
}

QuadraticPresentation totally_associative(int n) {
  QuadraticPresentation p;
  p.generator = GeneratorSpec(n, 0);
  p.name = std::to_string(n) + "tAss";
  const auto shapes = enumerate_shapes(n, 2);
  for (std::size_t i = 0; i + 1 < shapes.size(); ++i) {
    auto rel = Element::monomial(TreeMonomial::identity_labeled(shapes[i]));
    rel -= Element::monomial(TreeMonomial::identity_labeled(shapes[i + 1]));
    p.relations.push_back(std::move(rel));
  }
  return p;
}

}  // namespace

QuadraticPresentation builtin_presentation(std::string_view name) {
  static const std::regex prefix(R"(^(\d+)(t?)Ass$)");
  static const std::regex call(R"(^n(t?)Ass\((\d+)\)$)");
  const std::string s(name);
  std::smatch m;
  int n = 0;
  bool total = false;
  if (s == "Ass") {
    n = 2;
  } else if (std::regex_match(s, m, prefix)) {
    n = std::stoi(m[1]);
    total = m[2].length() > 0;
  } else if (std::regex_match(s, m, call)) {
    n = std::stoi(m[2]);
    total = m[1].length() > 0;
  } else {
    throw std::invalid_argument("unknown builtin presentation '" + s +
                                "' (expected Ass, <n>Ass, <n>tAss, nAss(<n>) or ntAss(<n>))");
  }
  if (n < 2 || n > 12) throw std::invalid_argument("builtin arity must be between 2 and 12");
  return total ? totally_associative(n) : partially_associative(n);
}

// ---------------------------------------------------------------------------

namespace {

void check_bound(int n, int m, const ComputeOptions& opts) {
  const auto dim = free_dimension(n, m);
  if (dim > opts.bound)
    throw ResourceLimitError("dim F(E)(" + std::to_string(m) + ") = " + dim.get_str() + " exceeds the bound " +
                             std::to_string(opts.bound) +
                             "; use the shape-level (one-variable) computation or raise the bound");
}

// Sigma-generators of the ideal in tree-degree k: relations grafted with
// single generator vertices on either side, k - 2 times.
std::vector<Element> ideal_generators(const QuadraticPresentation& p, int k) {
  const auto mu = Element::corolla(p.generator.arity);
  std::vector<Element> gens = p.relations;
  for (int j = 3; j <= k; ++j) {
    std::vector<Element> next;
    for (const auto& g : gens) {
      for (int i = 1; i <= p.generator.arity; ++i) next.push_back(compose_i(p.generator, mu, i, g));
      for (int i = 1; i <= g.arity(); ++i) next.push_back(compose_i(p.generator, g, i, mu));
    }
    gens = std::move(next);
  }
  std::erase_if(gens, [](const Element& e) { return e.is_zero(); });
  return gens;
}

// Shape-level ideal ranks for k = 1..max_k (index k-1).
std::vector<std::int64_t> shape_level_quotients(const QuadraticPresentation& p, int max_k, Exec exec) {
  const int n = p.generator.arity;
  const auto mu = Element::corolla(n);
  std::vector<std::int64_t> dims;
  if (max_k >= 1) dims.push_back(1);
  if (max_k < 2) return dims;

  ComponentBasis basis(n, 2, Level::shape);
  std::vector<SparseVector> rows;
  for (const auto& r : p.relations) rows.push_back(basis.to_vector(collapse_labels(r)));
  SpanBasis ideal = span_of(basis.dimension(), std::move(rows), exec);
  dims.push_back(basis.dimension() - ideal.rank());

  for (int k = 3; k <= max_k; ++k) {
    ComponentBasis next(n, k, Level::shape);
    const int prev_arity = basis.arity();
    const int per = n + prev_arity;
    const auto count = static_cast<std::ptrdiff_t>(ideal.rows().size()) * per;
    std::vector<SparseVector> grafted(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::parallel)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const auto v = basis.to_element(ideal.rows()[static_cast<std::size_t>(t / per)]);
      const int slot = static_cast<int>(t % per);
      const auto e = slot < n ? compose_i(p.generator, mu, slot + 1, v)
                              : compose_i(p.generator, v, slot - n + 1, mu);
      grafted[static_cast<std::size_t>(t)] = next.to_vector(e);
    }
    ideal = span_of(next.dimension(), std::move(grafted), exec);
    dims.push_back(next.dimension() - ideal.rank());
    basis = std::move(next);
  }
  return dims;
}

}  // namespace

SpanBasis relation_module(const QuadraticPresentation& p, const ComputeOptions& opts) {
  p.validate();
  const int m = 2 * p.generator.arity - 1;
  check_bound(p.generator.arity, m, opts);
  ComponentBasis basis(p.generator.arity, 2, Level::full);
  return sigma_closure(p.relations, basis, opts.exec);
}

SpanBasis ideal_slice(const QuadraticPresentation& p, int m, const ComputeOptions& opts) {
  p.validate();
  const int n = p.generator.arity;
  const int k = tree_degree_of(n, m);
  if (k < 0)
    throw std::invalid_argument("arity " + std::to_string(m) + " is not of the form k(" + std::to_string(n - 1) +
                                ")+1");
  check_bound(n, m, opts);
  if (k == 0) return SpanBasis(1);
  ComponentBasis basis(n, k, Level::full);
  if (k == 1) return SpanBasis(basis.dimension());
  return sigma_closure(ideal_generators(p, k), basis, opts.exec);
}

std::int64_t operad_dim(const QuadraticPresentation& p, int m, const ComputeOptions& opts) {
  const auto slice = ideal_slice(p, m, opts);
  return slice.ambient() - slice.rank();
}

// ---------------------------------------------------------------------------

std::string to_string(DimMethod m) { return m == DimMethod::full ? "full" : "shape-level"; }

std::int64_t OperadDims::at(int arity) const {
  auto it = entries.find(arity);
  if (it == entries.end()) throw std::out_of_range("no dimension recorded for arity " + std::to_string(arity));
  return it->second.dim;
}

nlohmann::ordered_json dims_json(const OperadDims& d) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [m, e] : d.entries) j[std::to_string(m)] = e.dim;
  return j;
}

nlohmann::ordered_json method_tags_json(const OperadDims& d) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [m, e] : d.entries) j[std::to_string(m)] = to_string(e.method);
  return j;
}

OperadDims one_variable_dims(const QuadraticPresentation& p, int max_k, const ComputeOptions& opts) {
  p.validate();
  if (max_k < 1) throw std::invalid_argument("one_variable_dims: max_k must be at least 1");
  OperadDims out;
  out.generator_arity = p.generator.arity;
  out.generator_degree = p.generator.degree;
  const auto dims = shape_level_quotients(p, max_k, opts.exec);
  for (int k = 1; k <= max_k; ++k)
    out.entries[arity_of(p.generator.arity, k)] = {dims[static_cast<std::size_t>(k - 1)], DimMethod::shape_level};
  return out;
}

OperadDims operad_dims(const QuadraticPresentation& p, int max_arity, DimsMode mode, const ComputeOptions& opts) {
  p.validate();
  const int n = p.generator.arity;
  const int max_k = (max_arity - 1) / (n - 1);
  OperadDims out;
  out.generator_arity = n;
  out.generator_degree = p.generator.degree;
  if (max_k < 1) return out;

  const bool want_shape = mode != DimsMode::full || p.is_regular();
  std::vector<std::int64_t> shape_dims;
  if (want_shape) shape_dims = shape_level_quotients(p, max_k, opts.exec);

  for (int k = 1; k <= max_k; ++k) {
    const int m = arity_of(n, k);
    const bool fits = free_dimension(n, m) <= opts.bound;
    const bool full = mode == DimsMode::full || (mode == DimsMode::mixed && fits);
    DimEntry e;
    if (full) {
      e.dim = operad_dim(p, m, opts);
      e.method = DimMethod::full;
      if (want_shape && p.is_regular()) {
        const Integer expected = factorial(m) * static_cast<long>(shape_dims[static_cast<std::size_t>(k - 1)]);
        if (expected != e.dim)
          throw std::logic_error("factorization check failed in arity " + std::to_string(m) + ": full dim " +
                                 std::to_string(e.dim) + " vs shape-level dim times m! = " + expected.get_str());
        e.factorization_checked = true;
      }
    } else {
      e.dim = shape_dims[static_cast<std::size_t>(k - 1)];
      e.method = DimMethod::shape_level;
    }
    out.entries[m] = e;
  }
  return out;
}

PowerSeries generating_function(const QuadraticPresentation& p, const OperadDims& dims, int order) {
  const int n = p.generator.arity;
  if (dims.generator_arity != n) throw std::invalid_argument("dims belong to a different generator arity");
  if (order < 0) order = dims.entries.empty() ? 1 : dims.entries.rbegin()->first;
  PowerSeries g(order);
  if (order >= 1) g.set(1, 1);
  for (int k = 1; arity_of(n, k) <= order; ++k) {
    const int m = arity_of(n, k);
    auto it = dims.entries.find(m);
    if (it == dims.entries.end())
      throw std::invalid_argument("generating_function: missing dimension for arity " + std::to_string(m));
    Rational c;
    if (it->second.method == DimMethod::full) {
      c = Rational(Integer(static_cast<long>(it->second.dim)), factorial(m));
      c.canonicalize();
    } else {
      if (!p.is_regular())
        throw std::invalid_argument("generating_function: shape-level dimension in arity " + std::to_string(m) +
                                    " does not determine the coefficient for a presentation with permuted labels");
      c = static_cast<long>(it->second.dim);
    }
    if (p.generator.degree == 1 && k % 2 == 1) c = -c;
    g.set(m, c);
  }
  return g;
}

bool tensor_compatibility_shape_check(const QuadraticPresentation& p, const QuadraticPresentation& q) {
  p.validate();
  q.validate();
  if (p.generator.arity != q.generator.arity)
    throw std::invalid_argument("tensor check needs generators of the same arity");
  if (p.generator.degree != 0 || q.generator.degree != 0)
    throw std::invalid_argument("tensor check is defined for degree-0 generators only");
  const ComponentBasis basis(p.generator.arity, 2, Level::shape);
  const int d = basis.dimension();
  auto shape_span = [&](const QuadraticPresentation& x) {
    std::vector<SparseVector> rows;
    for (const auto& r : x.relations) rows.push_back(basis.to_vector(collapse_labels(r)));
    return span_of(d, std::move(rows));
  };
  const auto rp = shape_span(p), rq = shape_span(q);
  std::vector<SparseVector> rows;
  for (const auto& r : rp.rows())
    for (int j = 0; j < d; ++j) {
      SparseVector v;
      for (const auto& e : r) v.push_back({e.col * d + j, e.value});
      std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
      rows.push_back(std::move(v));
    }
  for (const auto& r : rq.rows())
    for (int i = 0; i < d; ++i) {
      SparseVector v;
      for (const auto& e : r) v.push_back({i * d + e.col, e.value});
      rows.push_back(std::move(v));
    }
  const auto sum = span_of(d * d, std::move(rows));
  for (const auto& rel : p.relations) {
    SparseVector diag;
    for (const auto& e : basis.to_vector(collapse_labels(rel))) diag.push_back({e.col * d + e.col, e.value});
    if (!member(diag, d * d, sum)) return false;
  }
  return true;
}

}  // namespace opkit
