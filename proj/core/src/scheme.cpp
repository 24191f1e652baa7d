#include "dimcert/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dimcert/rounding.hpp"

namespace dimcert {

namespace {

void check_probabilities(const std::vector<double>& p, std::size_t n) {
  if (p.size() != n)
    throw std::invalid_argument("probability vector size mismatch");
  double sum = 0.0;
  for (double x : p) {
    if (!(x > 0.0) || !std::isfinite(x))
      throw std::invalid_argument("probabilities must be strictly positive");
    sum += x;
  }
  const double slack =
      static_cast<double>(n) * std::numeric_limits<double>::epsilon();
  if (std::abs(sum - 1.0) > slack + std::numeric_limits<double>::epsilon())
    throw std::invalid_argument("probabilities must sum to 1");
}

}  // namespace

void SimilarityScheme::validate() const {
  if (translations.empty()) throw std::invalid_argument("empty scheme");
  if (!(ratio_box.lo > 0.0) || !(ratio_box.lo <= ratio_box.hi) ||
      !(ratio_box.hi < 1.0))
    throw std::invalid_argument("ratio box must satisfy 0 < lo <= hi < 1");
  for (double c : translations)
    if (!std::isfinite(c))
      throw std::invalid_argument("translations must be finite");
  check_probabilities(probabilities, translations.size());
}

SimilarityScheme SimilarityScheme::bernoulli(Interval ratio_box) {
  return {ratio_box, {0.0, 1.0}, {0.5, 0.5}};
}

SimilarityScheme SimilarityScheme::zero_one_three(Interval ratio_box) {
  return {ratio_box, {0.0, 1.0, 3.0}, {1.0 / 3, 1.0 / 3, 1.0 / 3}};
}

void AffineScheme::validate() const {
  if (maps.empty()) throw std::invalid_argument("empty scheme");
  for (const Map& m : maps) {
    if (!(m.ratio > 0.0) || !(m.ratio < 1.0))
      throw std::invalid_argument("map ratios must lie in (0, 1)");
    if (!std::isfinite(m.translation))
      throw std::invalid_argument("translations must be finite");
  }
  check_probabilities(probabilities, maps.size());
}

AffineScheme AffineScheme::from_similarity(const SimilarityScheme& s,
                                           double ratio) {
  AffineScheme out;
  for (double c : s.translations) out.maps.push_back({ratio, c});
  out.probabilities = s.probabilities;
  out.validate();
  return out;
}

double ComplementaryScheme::max_abs_difference() const {
  double m = 0.0;
  for (double d : differences) m = std::max(m, std::abs(d));
  return m;
}

std::int64_t UniformPartition::locate(double x) const {
  const double t = (x - lo) / cell_width();
  auto k = static_cast<std::int64_t>(std::floor(t));
  return std::clamp<std::int64_t>(k, 0, cells - 1);
}

UniformPartition UniformPartition::over(double lo, double hi,
                                        std::int64_t cells) {
  if (cells < 1) throw std::invalid_argument("partition needs >= 1 cell");
  if (!(lo < hi)) throw std::invalid_argument("empty partition interval");
  return {lo, hi, cells};
}

UniformPartition UniformPartition::of(const AdmissibleInterval& J,
                                      std::int64_t cells) {
  return over(J.lo(), J.hi(), cells);
}

double StepFunction::max_value() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

double StepFunction::min_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (double v : values) m = std::min(m, v);
  return m;
}

StepFunction StepFunction::indicator(const UniformPartition& p) {
  return {p, std::vector<double>(static_cast<std::size_t>(p.cells), 1.0)};
}

std::string to_string(CertStatus s) {
  return s == CertStatus::certified ? "certified" : "inconclusive";
}

double BoundTable::lookup(double lambda) const {
  double best = -1.0;
  for (const BoundRow& r : rows) {
    if (r.status == CertStatus::certified && r.lambda_lo <= lambda &&
        lambda <= r.lambda_hi)
      best = std::max(best, r.alpha);
  }
  if (best < 0.0)
    throw std::out_of_range("no certified row covers the requested lambda");
  return best;
}

ComplementaryScheme build_complementary(const SimilarityScheme& scheme) {
  scheme.validate();
  const std::size_t k = scheme.translations.size();
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      pairs.emplace_back(scheme.translations[i] - scheme.translations[j],
                         scheme.probabilities[i] * scheme.probabilities[j]);
  std::sort(pairs.begin(), pairs.end());

  ComplementaryScheme comp;
  for (const auto& [d, q] : pairs) {
    if (!comp.differences.empty() && comp.differences.back() == d)
      comp.weights.back() += q;
    else {
      comp.differences.push_back(d);
      comp.weights.push_back(q);
    }
  }
  return comp;
}

AdmissibleInterval admissible_interval(const ComplementaryScheme& comp,
                                       Interval ratio_box, double margin) {
  if (!(margin > 0.0)) throw std::invalid_argument("margin must be positive");
  if (!(ratio_box.hi < 1.0))
    throw std::invalid_argument("lambda_max must be < 1");
  const double maxd = comp.max_abs_difference();
  if (maxd == 0.0)
    throw std::invalid_argument(
        "degenerate scheme (m = 0): supply an explicit interval");
  const double m = div_up(maxd, sub_down(1.0, ratio_box.hi));
  const double a = mul_up(1.0 + margin, m);
  return {a, m};
}

bool check_admissibility(const AdmissibleInterval& J,
                         const ComplementaryScheme& comp, Interval ratio_box) {
  const double reach =
      add_up(mul_up(ratio_box.hi, J.half_width), comp.max_abs_difference());
  return reach < J.half_width;
}

double extend_by_squaring(const BoundTable& table, double lambda) {
  if (!(lambda >= 0.5) || !(lambda < 1.0))
    throw std::invalid_argument("squaring reduction needs lambda in [0.5, 1)");
  double x = lambda;
  while (x > 0.8) x *= x;
  return table.lookup(x);
}

}  // namespace dimcert
