#pragma once

#include "opkit/component.hpp"
#include "opkit/exec.hpp"
#include "opkit/linalg.hpp"
#include "opkit/series.hpp"
#include "opkit/trees.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace opkit {

/// One n-ary generator with relations in the quadratic component F(E)(2n-1).
struct QuadraticPresentation {
  std::string name;
  std::string generator_name = "mu";
  GeneratorSpec generator;
  std::vector<Element> relations;

  /// Throws std::invalid_argument unless every relation is a nonzero element
  /// of arity 2n-1 built from two n-ary vertices.
  void validate() const;
  /// Every relation uses a single leaf labeling across its monomials, so the
  /// relation module is a sum of regular representations and dimensions
  /// factor as (shape-level dim) * m!.
  bool is_regular() const;

  friend bool operator==(const QuadraticPresentation&, const QuadraticPresentation&) = default;
};

struct ComputeOptions {
  /// Largest dim F(E)(m) for which full multilinear computation is allowed.
  std::int64_t bound = 5000;
  Exec exec = Exec::parallel;
};

/// "Ass", "<n>Ass", "<n>tAss", "nAss(<n>)", "ntAss(<n>)".
QuadraticPresentation builtin_presentation(std::string_view name);

/// Relations with a uniform labeling relabeled to x1..xm and scaled so the
/// first coefficient is 1.
Element straighten(const Element& relation);

/// S_{2n-1}-span of the relations inside F(E)(2n-1).
SpanBasis relation_module(const QuadraticPresentation& p, const ComputeOptions& opts = {});

/// Arity-m component of the operadic ideal generated by the relations.
SpanBasis ideal_slice(const QuadraticPresentation& p, int m, const ComputeOptions& opts = {});

/// dim F(E)(m) - dim ideal_slice(p, m), by full multilinear computation.
std::int64_t operad_dim(const QuadraticPresentation& p, int m, const ComputeOptions& opts = {});

enum class DimMethod { full, shape_level };
std::string to_string(DimMethod m);

struct DimEntry {
  std::int64_t dim = 0;
  DimMethod method = DimMethod::full;
  /// Full and shape-level dims were both computed and satisfy dim = shape * m!.
  bool factorization_checked = false;
};

struct OperadDims {
  int generator_arity = 2;
  int generator_degree = 0;
  std::map<int, DimEntry> entries;  // keyed by arity

  std::int64_t at(int arity) const;
};

/// {"3": 6, "5": 240, ...} in increasing arity.
nlohmann::ordered_json dims_json(const OperadDims& d);
/// {"3": "full", "7": "shape-level", ...}
nlohmann::ordered_json method_tags_json(const OperadDims& d);

/// Shape-level (one-variable) dims for k = 1..max_k generator vertices:
/// leaf labels identified, graded signs when the generator has degree 1.
OperadDims one_variable_dims(const QuadraticPresentation& p, int max_k, const ComputeOptions& opts = {});

enum class DimsMode { mixed, full, shape_level };

/// Dims at every admissible arity 1 < m <= max_arity. Mixed mode computes
/// fully up to the bound and at shape level beyond; for regular
/// presentations the factorization is checked wherever both are available.
OperadDims operad_dims(const QuadraticPresentation& p, int max_arity, DimsMode mode = DimsMode::mixed,
                       const ComputeOptions& opts = {});

/// sum_m chi(P(m)) x^m / m!, with the unit in arity 1. For a degree-1
/// generator the component with k vertices counts with sign (-1)^k.
/// Order defaults to the largest arity in dims.
PowerSeries generating_function(const QuadraticPresentation& p, const OperadDims& dims, int order = -1);

/// Shape-level necessary condition for the tensor product of a p-algebra
/// and a q-algebra to be a p-algebra.
bool tensor_compatibility_shape_check(const QuadraticPresentation& p, const QuadraticPresentation& q);

}  // namespace opkit
