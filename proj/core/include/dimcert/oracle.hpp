// Brute-force, non-rigorous estimators used to sanity-check certificates:
// finite-level atom measures and empirical correlation / ball-mass
// exponents from log-log regression.

#pragma once

#include <cstdint>
#include <vector>

#include "dimcert/scheme.hpp"

namespace dimcert {

struct AtomMeasure {
  std::vector<double> positions;  // sorted strictly increasing
  std::vector<double> weights;    // positive, sum to 1 within roundoff
  std::int64_t depth = 0;
  double merge_tolerance = 0.0;   // 0 = exact comparison
};

struct EmpiricalDimensions {
  double corr_slope = 0.0;
  double frostman_slope = 0.0;
  double corr_residual = 0.0;
  double frostman_residual = 0.0;
};

/// Enumerates all depth-n words of the scheme at the exact ratio
/// ratio_box.lo, positions sum_k c_{w_k} lambda^k, weights prod p_{w_k},
/// merging collided atoms. The merge tolerance is 0 when lambda is a
/// dyadic rational and 2^-40 otherwise. Throws when the atom count would
/// exceed `cap` (default 2^24).
AtomMeasure finite_level_atoms(const SimilarityScheme& scheme,
                               std::int64_t depth,
                               std::int64_t cap = std::int64_t{1} << 24);

/// Correlation sum P(|x - y| <= r) at one scale, by a two-pointer sweep
/// over the sorted atoms. Exact and nondecreasing in r.
double correlation_sum(const AtomMeasure& atoms, double r);

/// Largest ball mass max_x mu(B_r(x)) over balls centred at atoms.
double max_ball_mass(const AtomMeasure& atoms, double r);

/// Least-squares slopes of log correlation sum and log max ball mass
/// against log r over n_scales geometric scales in [r_lo, r_hi].
/// Explicitly non-rigorous. Throws on degenerate (single-atom) input.
EmpiricalDimensions empirical_dimensions(const AtomMeasure& atoms, double r_lo,
                                         double r_hi, std::int64_t n_scales);

}  // namespace dimcert
