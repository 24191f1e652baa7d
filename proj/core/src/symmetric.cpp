#include "dimcert/symmetric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dimcert/rounding.hpp"
#include "discretize.hpp"

namespace dimcert {

namespace {

constexpr double kMinTheta = 100.0 * std::numeric_limits<double>::epsilon();

void require_symmetric(const UniformPartition& p) {
  // Edges are generated about the midpoint; the operator needs J = [-a, a].
  if (std::abs(p.lo + p.hi) > 1e-12 * std::abs(p.hi))
    throw std::invalid_argument("symmetric operator needs J = [-a, a]");
}

AdmissibleInterval interval_of(const UniformPartition& p) {
  return {p.hi, 0.0};
}

void apply_d2_into(const StepFunction& psi, double alpha, Interval ratio_box,
                   const ComplementaryScheme& comp, std::vector<double>& out) {
  const auto n = static_cast<std::size_t>(psi.partition.cells);
  out.assign(n, 0.0);
  detail::ShiftAccumulator acc(psi.partition, psi.values, ratio_box.lo,
                               ratio_box.hi);
  acc.run(comp.differences, comp.weights, out);
  const double scal = pow_up(ratio_box.lo, -alpha);
  for (double& v : out) v = mul_up(scal, v);
}

}  // namespace

void HatConfig::validate() const {
  if (!(theta >= kMinTheta))
    throw std::invalid_argument("theta must be >= 100 ulp");
  if (!(threshold > 0.0) || !(threshold < 1.0))
    throw std::invalid_argument("threshold must lie in (0, 1)");
  if (max_iterations < 1)
    throw std::invalid_argument("max_iterations must be >= 1");
}

StepFunction apply_d2_discrete(const StepFunction& psi, double alpha,
                               Interval ratio_box,
                               const ComplementaryScheme& comp) {
  require_symmetric(psi.partition);
  if (!check_admissibility(interval_of(psi.partition), comp, ratio_box))
    throw std::invalid_argument("configuration is not admissible");
  StepFunction out{psi.partition, {}};
  apply_d2_into(psi, alpha, ratio_box, comp, out.values);
  return out;
}

StepFunction hat_step(const StepFunction& applied, const StepFunction& previous,
                      double theta) {
  if (applied.partition != previous.partition)
    throw std::invalid_argument("partition mismatch in hat_step");
  StepFunction out{applied.partition, applied.values};
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = std::min(add_up(applied.values[k], theta),
                             previous.values[k]);
  return out;
}

namespace {

// Shared hat-iteration loop. Runs until the success threshold is reached,
// a fixed point is detected, or the iteration budget is exhausted. With
// steps >= 0, runs exactly that many iterations instead.
CertificateResult hat_loop(const ComplementaryScheme& comp, Interval ratio_box,
                           const AdmissibleInterval& J, std::int64_t cells,
                           const HatConfig& cfg, std::int64_t exact_steps) {
  if (!check_admissibility(J, comp, ratio_box))
    throw std::invalid_argument("configuration is not admissible");
  StepFunction psi = StepFunction::indicator(UniformPartition::of(J, cells));
  std::vector<double> applied;
  const std::int64_t budget =
      exact_steps >= 0 ? exact_steps : cfg.max_iterations;

  for (std::int64_t n = 1; n <= budget; ++n) {
    apply_d2_into(psi, cfg.alpha, ratio_box, comp, applied);
    double mx = 0.0;
    bool changed = false;
    for (std::size_t k = 0; k < psi.values.size(); ++k) {
      const double v =
          std::min(add_up(applied[k], cfg.theta), psi.values[k]);
      if (v != psi.values[k]) changed = true;
      psi.values[k] = v;
      mx = std::max(mx, v);
    }
    if (exact_steps < 0) {
      if (mx < cfg.threshold)
        return {CertStatus::certified, cfg.alpha, n, std::move(psi)};
      if (!changed)  // fixed point; further iterations cannot help
        return {CertStatus::inconclusive, cfg.alpha, n, std::move(psi)};
    }
  }
  return {CertStatus::inconclusive, cfg.alpha, budget, std::move(psi)};
}

}  // namespace

StepFunction hat_iterate(const ComplementaryScheme& comp, Interval ratio_box,
                         const AdmissibleInterval& J, std::int64_t cells,
                         double alpha, double theta, std::int64_t steps) {
  HatConfig cfg{theta, steps > 0 ? steps : 1, 0.5, alpha};
  cfg.validate();
  return hat_loop(comp, ratio_box, J, cells, cfg, steps).final_function;
}

CertificateResult certify_alpha(const ComplementaryScheme& comp,
                                Interval ratio_box, const AdmissibleInterval& J,
                                std::int64_t cells, const HatConfig& cfg) {
  cfg.validate();
  return hat_loop(comp, ratio_box, J, cells, cfg, -1);
}

double one_shot_alpha(const StepFunction& psi, Interval ratio_box,
                      const ComplementaryScheme& comp) {
  StepFunction d0 = apply_d2_discrete(psi, 0.0, ratio_box, comp);
  double max_ratio = 0.0;
  for (std::size_t k = 0; k < psi.values.size(); ++k) {
    if (!(psi.values[k] > 0.0))
      throw std::invalid_argument("one_shot_alpha needs psi > 0 on J");
    max_ratio = std::max(max_ratio, div_up(d0.values[k], psi.values[k]));
  }
  return div_down(log_up(max_ratio), log_down(ratio_box.lo));
}

bool check_pointwise_d2(const std::function<double(double)>& psi, double alpha,
                        double lambda, const ComplementaryScheme& comp,
                        const std::vector<double>& grid, Interval J) {
  const auto clamped = [&](double y) {
    return (J.lo <= y && y <= J.hi) ? psi(y) : 0.0;
  };
  const double scal = std::pow(lambda, -alpha);
  for (double x : grid) {
    double s = 0.0;
    for (std::size_t i = 0; i < comp.differences.size(); ++i)
      s += comp.weights[i] * clamped((x - comp.differences[i]) / lambda);
    if (!(scal * s < clamped(x))) return false;
  }
  return true;
}

bool partition_advisory_ok(const AdmissibleInterval& J, std::int64_t cells,
                           Interval ratio_box) {
  const double w = ratio_box.width();
  if (w == 0.0) return true;
  const double len = 2.0 * J.half_width;
  const double nd = static_cast<double>(cells);
  return 0.5 * nd * w <= len && len <= 2.0 * w * nd;
}

}  // namespace dimcert
