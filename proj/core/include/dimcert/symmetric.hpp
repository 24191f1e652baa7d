// The symmetric diffusion operator for difference schemes, its finite-rank
// discretization on piecewise-constant functions, the thresholded
// hat-iteration that constructs certifying test functions, and the one-shot
// exponent improvement.
//
// The discretized operator never under-approximates: per cell the argument
// hull is enclosed with outward rounding and the scalar prefactor
// (inf Lambda)^(-alpha) is rounded up, so a computed strict inequality
// certifies the exact one.

#pragma once

#include <functional>
#include <vector>

#include "dimcert/scheme.hpp"

namespace dimcert {

struct HatConfig {
  double theta = 1e-8;          // hat-operator increment
  std::int64_t max_iterations = 200;
  double threshold = 0.995;     // success threshold t
  double alpha = 0.5;

  void validate() const;
};

struct CertificateResult {
  CertStatus status = CertStatus::inconclusive;
  double alpha = 0.0;
  std::int64_t iterations_used = 0;
  StepFunction final_function;
};

/// One application of the discretized symmetric diffusion operator.
/// Requires a symmetric partition and an admissible configuration.
StepFunction apply_d2_discrete(const StepFunction& psi, double alpha,
                               Interval ratio_box,
                               const ComplementaryScheme& comp);

/// Per-cell min(applied + theta, previous). Partitions must match.
StepFunction hat_step(const StepFunction& applied, const StepFunction& previous,
                      double theta);

/// Exactly `steps` hat-iterations from the indicator of J.
StepFunction hat_iterate(const ComplementaryScheme& comp, Interval ratio_box,
                         const AdmissibleInterval& J, std::int64_t cells,
                         double alpha, double theta, std::int64_t steps);

/// Iterates the hat operator from the indicator of J; certified at the
/// first n <= K with all values < t. Inconclusive is a value, not an error.
CertificateResult certify_alpha(const ComplementaryScheme& comp,
                                Interval ratio_box, const AdmissibleInterval& J,
                                std::int64_t cells, const HatConfig& cfg);

/// The largest alpha for which the discretized operator maps psi below
/// itself, from one application at alpha = 0; rounded down. Rejects psi
/// with any nonpositive cell.
double one_shot_alpha(const StepFunction& psi, Interval ratio_box,
                      const ComplementaryScheme& comp);

/// Sampled strict-inequality check for closed-form test functions
/// (diagnostic, not a certificate). psi is treated as 0 outside J.
bool check_pointwise_d2(const std::function<double(double)>& psi, double alpha,
                        double lambda, const ComplementaryScheme& comp,
                        const std::vector<double>& grid, Interval J);

/// Advisory from the cell-count heuristic: cell width comparable with the
/// width of the ratio box. Degenerate boxes lift the advisory.
bool partition_advisory_ok(const AdmissibleInterval& J, std::int64_t cells,
                           Interval ratio_box);

}  // namespace dimcert
