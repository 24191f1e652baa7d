// Alpha-search over a bracket, parameter-range scanning into bound tables,
// and the pointwise near-1 Gaussian check.

#pragma once

#include "dimcert/scheme.hpp"
#include "dimcert/symmetric.hpp"

namespace dimcert {

struct SearchConfig {
  double d1 = 0.0;          // certified start of the bracket
  double d2 = 1.0;
  double epsilon = 1e-2;    // target grid resolution
  std::int64_t cells = 40000;
  std::int64_t max_iterations = 200;
  double theta = 1e-7;
  double threshold = 0.995;
  double margin = 0.1;      // admissible-interval margin
  // Number of equal parameter sub-intervals certified per box. The hull of
  // a wide ratio box smears the argument windows and caps the reachable
  // alpha well below the per-parameter value; certifying every sub-interval
  // separately recovers the sharp bound while the row still covers the box.
  std::int64_t lambda_subdivisions = 1;

  void validate() const;
  HatConfig hat(double alpha) const;
};

/// Walks a grid over [d1, d2] upward from a certified d1, recursing into
/// the last passing subinterval until its width is <= epsilon; returns the
/// largest grid-certified alpha. Inconclusive (at d1) if even d1 fails.
/// With d1 == d2 this is certify_alpha at d1.
CertificateResult refine_bound(const SimilarityScheme& scheme,
                               Interval ratio_box, const SearchConfig& cfg);

/// Covers [lambda_lo, lambda_hi] with n_intervals boxes overlapping by
/// overlap_fraction of the box width and runs refine_bound per box on
/// `workers` threads. With a prior table, each box is warm-started from
/// the prior bound (d1 = alpha - epsilon, d2 = min(1, alpha + 0.02)).
/// Inconclusive boxes become rows with status inconclusive and alpha = d1,
/// so the table always covers the range. Rows are ordered by box;
/// the table is independent of the worker count.
BoundTable scan_range(const SimilarityScheme& scheme_family, double lambda_lo,
                      double lambda_hi, std::int64_t n_intervals,
                      double overlap_fraction, const SearchConfig& cfg,
                      std::int64_t workers = 1,
                      const BoundTable* prior = nullptr);

/// Pointwise check of the Gaussian test function f(x) = exp(-d(1-e)^2 x^2),
/// d = 2e - e^2, against the Bernoulli symmetric operator at lambda = 1 - e,
/// alpha = 1 - c*e, on a symmetric grid of n_points over
/// [-grid_halfwidth, grid_halfwidth]. Diagnostic, not a certificate.
bool near_one_check(double epsilon, double c, double grid_halfwidth,
                    std::int64_t n_points);

}  // namespace dimcert
