#include "dimcert/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dimcert {

namespace {

bool dyadic(double lambda) {
  const double scaled = std::ldexp(lambda, 20);
  return scaled == std::floor(scaled);
}

void sort_and_merge(std::vector<double>& pos, std::vector<double>& w,
                    double tol) {
  std::vector<std::size_t> order(pos.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
  std::vector<double> np, nw;
  np.reserve(pos.size());
  nw.reserve(pos.size());
  for (std::size_t i : order) {
    if (!np.empty() && pos[i] - np.back() <= tol)
      nw.back() += w[i];
    else {
      np.push_back(pos[i]);
      nw.push_back(w[i]);
    }
  }
  pos = std::move(np);
  w = std::move(nw);
}

}  // namespace

AtomMeasure finite_level_atoms(const SimilarityScheme& scheme,
                               std::int64_t depth, std::int64_t cap) {
  scheme.validate();
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  const double lambda = scheme.ratio_box.lo;
  const double tol = dyadic(lambda) ? 0.0 : std::ldexp(1.0, -40);
  const std::size_t k = scheme.translations.size();

  AtomMeasure out;
  out.positions = {0.0};
  out.weights = {1.0};
  out.depth = depth;
  out.merge_tolerance = tol;

  double scale = 1.0;  // lambda^level
  for (std::int64_t level = 0; level < depth; ++level) {
    if (static_cast<std::int64_t>(out.positions.size()) *
            static_cast<std::int64_t>(k) > cap)
      throw std::runtime_error("atom budget exceeded");
    std::vector<double> pos, w;
    pos.reserve(out.positions.size() * k);
    w.reserve(out.positions.size() * k);
    for (std::size_t m = 0; m < k; ++m) {
      const double shift = scheme.translations[m] * scale;
      const double p = scheme.probabilities[m];
      for (std::size_t i = 0; i < out.positions.size(); ++i) {
        pos.push_back(out.positions[i] + shift);
        w.push_back(out.weights[i] * p);
      }
    }
    sort_and_merge(pos, w, tol);
    out.positions = std::move(pos);
    out.weights = std::move(w);
    scale *= lambda;
  }
  return out;
}

namespace {

// Weight of atoms within [x - r, x + r] for every atom x, via one sweep.
// visit(i, mass) is called in index order.
template <class Visit>
void ball_masses(const AtomMeasure& a, double r, Visit visit) {
  const std::size_t n = a.positions.size();
  std::size_t lo = 0, hi = 0;
  double mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    while (hi < n && a.positions[hi] <= a.positions[i] + r)
      mass += a.weights[hi++];
    while (a.positions[lo] < a.positions[i] - r) mass -= a.weights[lo++];
    visit(i, mass);
  }
}

double regression_slope(const std::vector<double>& x,
                        const std::vector<double>& y, double& residual) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icept = (sy - slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - slope * x[i] - icept;
    ss += e * e;
  }
  residual = std::sqrt(ss / n);
  return slope;
}

}  // namespace

double correlation_sum(const AtomMeasure& atoms, double r) {
  double total = 0.0;
  ball_masses(atoms, r, [&](std::size_t i, double mass) {
    total += atoms.weights[i] * mass;
  });
  return total;
}

double max_ball_mass(const AtomMeasure& atoms, double r) {
  double best = 0.0;
  ball_masses(atoms, r,
              [&](std::size_t, double mass) { best = std::max(best, mass); });
  return best;
}

EmpiricalDimensions empirical_dimensions(const AtomMeasure& atoms, double r_lo,
                                         double r_hi, std::int64_t n_scales) {
  if (atoms.positions.size() < 2)
    throw std::invalid_argument("need at least two atoms");
  if (!(0.0 < r_lo) || !(r_lo < r_hi) || n_scales < 2)
    throw std::invalid_argument("need 0 < r_lo < r_hi and >= 2 scales");

  std::vector<double> lr, lc, lb;
  const double ratio = r_hi / r_lo;
  for (std::int64_t s = 0; s < n_scales; ++s) {
    const double r =
        r_lo * std::pow(ratio, static_cast<double>(s) /
                                   static_cast<double>(n_scales - 1));
    lr.push_back(std::log(r));
    lc.push_back(std::log(correlation_sum(atoms, r)));
    lb.push_back(std::log(max_ball_mass(atoms, r)));
  }
  EmpiricalDimensions out;
  out.corr_slope = regression_slope(lr, lc, out.corr_residual);
  out.frostman_slope = regression_slope(lr, lb, out.frostman_residual);
  return out;
}

}  // namespace dimcert
