// The asymmetric diffusion operator for affine schemes with (possibly)
// distinct contraction ratios, and alpha-regularity certification of the
// stationary measure on a neighborhood of its support.

#pragma once

#include "dimcert/scheme.hpp"
#include "dimcert/symmetric.hpp"

namespace dimcert {

struct RegularityCertificate {
  CertStatus status = CertStatus::inconclusive;
  double alpha = 0.0;
  double neighborhood_radius = 0.0;
  std::int64_t iterations_used = 0;
  StepFunction final_function;
};

/// Smallest invariant interval [min_j c_j/(1-lambda_j), max_j c_j/(1-lambda_j)]
/// from the fixed points, outward-rounded.
Interval support_interval(const AffineScheme& scheme);

/// One application of the discretized asymmetric operator: per cell
/// sum_j p_j lambda_j^(-alpha) * sup of psi over the cells meeting
/// (cell - c_j)/lambda_j, rounded up. When all ratios are equal the result
/// agrees bitwise with apply_d2_discrete on the same shifts and weights.
StepFunction apply_d1_discrete(const StepFunction& psi, double alpha,
                               const AffineScheme& scheme);

/// Default neighborhood radius: 5% of the support interval length.
double default_regularity_radius(Interval support);

/// Hat-iterates the asymmetric operator from the indicator of B_r(J),
/// J = support_interval(scheme). Certified when all values drop below
/// cfg.threshold within cfg.max_iterations; the alpha argument overrides
/// cfg.alpha. Inconclusive is a value, not an error.
RegularityCertificate certify_regularity(const AffineScheme& scheme,
                                         double alpha, double r,
                                         std::int64_t cells,
                                         const HatConfig& cfg);

}  // namespace dimcert
