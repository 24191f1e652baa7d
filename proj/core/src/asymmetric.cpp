#include "dimcert/asymmetric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dimcert/rounding.hpp"
#include "discretize.hpp"

namespace dimcert {

Interval support_interval(const AffineScheme& scheme) {
  scheme.validate();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& m : scheme.maps) {
    lo = std::min(lo, div_down(m.translation, sub_down(1.0, m.ratio)));
    hi = std::max(hi, div_up(m.translation, sub_up(1.0, m.ratio)));
  }
  return {lo, hi};
}

namespace {

bool equal_ratios(const AffineScheme& s) {
  for (const auto& m : s.maps)
    if (m.ratio != s.maps.front().ratio) return false;
  return true;
}

void apply_d1_into(const StepFunction& psi, double alpha,
                   const AffineScheme& scheme, std::vector<double>& out) {
  const std::size_t n = psi.values.size();
  out.assign(n, 0.0);

  // Maps sorted by translation; equal translations with equal ratios are
  // merged so the accumulation pairing matches the complementary scheme's.
  std::vector<std::size_t> order(scheme.maps.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scheme.maps[a].translation < scheme.maps[b].translation;
  });

  if (equal_ratios(scheme)) {
    const double lambda = scheme.maps.front().ratio;
    std::vector<double> shifts, weights;
    for (std::size_t i : order) {
      const double c = scheme.maps[i].translation;
      if (!shifts.empty() && shifts.back() == c)
        weights.back() += scheme.probabilities[i];
      else {
        shifts.push_back(c);
        weights.push_back(scheme.probabilities[i]);
      }
    }
    detail::ShiftAccumulator acc(psi.partition, psi.values, lambda, lambda);
    acc.run(shifts, weights, out);
    const double scal = pow_up(lambda, -alpha);
    for (double& v : out) v = mul_up(scal, v);
    return;
  }

  std::vector<double> sup(n);
  std::vector<std::int64_t> deque_buf;
  for (std::size_t i : order) {
    const auto& m = scheme.maps[i];
    detail::windowed_sup(psi.partition, psi.values, m.translation, m.ratio,
                         m.ratio, sup, deque_buf);
    const double coef =
        mul_up(scheme.probabilities[i], pow_up(m.ratio, -alpha));
    for (std::size_t k = 0; k < n; ++k)
      out[k] = add_up(out[k], mul_up(coef, sup[k]));
  }
}

}  // namespace

StepFunction apply_d1_discrete(const StepFunction& psi, double alpha,
                               const AffineScheme& scheme) {
  scheme.validate();
  StepFunction out{psi.partition, {}};
  apply_d1_into(psi, alpha, scheme, out.values);
  return out;
}

double default_regularity_radius(Interval support) {
  return 0.05 * support.width();
}

RegularityCertificate certify_regularity(const AffineScheme& scheme,
                                         double alpha, double r,
                                         std::int64_t cells,
                                         const HatConfig& cfg) {
  scheme.validate();
  cfg.validate();
  if (!(r > 0.0)) throw std::invalid_argument("neighborhood radius must be > 0");

  const Interval supp = support_interval(scheme);
  const double blo = down(supp.lo - r);
  const double bhi = up(supp.hi + r);
  StepFunction psi =
      StepFunction::indicator(UniformPartition::over(blo, bhi, cells));

  std::vector<double> applied;
  for (std::int64_t n = 1; n <= cfg.max_iterations; ++n) {
    apply_d1_into(psi, alpha, scheme, applied);
    double mx = 0.0;
    bool changed = false;
    for (std::size_t k = 0; k < psi.values.size(); ++k) {
      const double v = std::min(add_up(applied[k], cfg.theta), psi.values[k]);
      if (v != psi.values[k]) changed = true;
      psi.values[k] = v;
      mx = std::max(mx, v);
    }
    if (mx < cfg.threshold)
      return {CertStatus::certified, alpha, r, n, std::move(psi)};
    if (!changed)
      return {CertStatus::inconclusive, alpha, r, n, std::move(psi)};
  }
  return {CertStatus::inconclusive, alpha, r, cfg.max_iterations,
          std::move(psi)};
}

}  // namespace dimcert
