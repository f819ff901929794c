#pragma once

// Quadratic duality for one n-ary generator.
//
// Pairing on F(E)(2n-1) x F(E^v)(2n-1): for the quadratic shapes
// s_i = mu o_i mu (canonical order) and a labeling sigma,
//   < s_i . sigma , s_j . tau > = delta_ij delta_{sigma,tau} sgn(sigma) (-1)^(i-1).

#include "opkit/presentation.hpp"

namespace opkit {

/// Same arity, sign-twisted representation; the degree is n mod 2 for a
/// degree-0 generator and 0 for a degree-1 generator.
GeneratorSpec czech_dual_generator(const GeneratorSpec& g);

using PairingForm = SparseMatrix;

/// Diagonal +-1 matrix in the full coordinates of F(E)(2n-1).
PairingForm pairing(const GeneratorSpec& gen);

enum class DualGrading {
  graded,     // dual generator degree from czech_dual_generator
  nongraded,  // dual generator forced to degree 0
};

/// Relations: S-generators of the annihilator of the relation module. The
/// full multilinear annihilator is used within the bound; beyond it, regular
/// presentations are dualized shape-wise (the pairing is block-diagonal over
/// labelings, so the two agree).
QuadraticPresentation dual_presentation(const QuadraticPresentation& p, const ComputeOptions& opts = {},
                                        DualGrading grading = DualGrading::graded);

/// Dims of the dual operad for k = 1..max_k, full within the bound and
/// shape level beyond.
OperadDims dual_dims(const QuadraticPresentation& p, int max_k, const ComputeOptions& opts = {});

/// Everything the Koszul test needs, computed through `order`.
struct KoszulAnalysis {
  QuadraticPresentation dual;
  OperadDims dims;
  OperadDims dual_dims;
  PowerSeries g;
  PowerSeries g_dual;
  KoszulReport report;
};

KoszulAnalysis analyze_koszul(const QuadraticPresentation& p, int order, const ComputeOptions& opts = {},
                              DualGrading grading = DualGrading::graded);

}  // namespace opkit
