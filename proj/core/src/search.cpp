#include "dimcert/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace dimcert {

void SearchConfig::validate() const {
  if (!(0.0 <= d1) || !(d1 <= d2) || !(d2 <= 1.0))
    throw std::invalid_argument("bracket must satisfy 0 <= d1 <= d2 <= 1");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("epsilon must be positive");
  if (d1 < d2 && epsilon > d2 - d1)
    throw std::invalid_argument("epsilon exceeds the bracket width");
  if (lambda_subdivisions < 1)
    throw std::invalid_argument("lambda_subdivisions must be >= 1");
  hat(d1).validate();
}

HatConfig SearchConfig::hat(double alpha) const {
  return {theta, max_iterations, threshold, alpha};
}

CertificateResult refine_bound(const SimilarityScheme& scheme,
                               Interval ratio_box, const SearchConfig& cfg) {
  cfg.validate();
  const std::int64_t subdivisions =
      ratio_box.lo < ratio_box.hi ? cfg.lambda_subdivisions : 1;
  std::vector<Interval> boxes;
  for (std::int64_t s = 0; s < subdivisions; ++s) {
    const double w = (ratio_box.hi - ratio_box.lo) /
                     static_cast<double>(subdivisions);
    boxes.push_back(
        {ratio_box.lo + static_cast<double>(s) * w,
         s == subdivisions - 1 ? ratio_box.hi
                               : ratio_box.lo + static_cast<double>(s + 1) * w});
  }
  struct SubBox {
    ComplementaryScheme comp;
    Interval box;
    AdmissibleInterval J;
  };
  std::vector<SubBox> subs;
  for (const Interval& box : boxes) {
    ComplementaryScheme comp = build_complementary(
        {box, scheme.translations, scheme.probabilities});
    const AdmissibleInterval J = admissible_interval(comp, box, cfg.margin);
    subs.push_back({std::move(comp), box, J});
  }
  // Certified for the box iff certified for every sub-box; the first
  // inconclusive sub-box short-circuits the failure.
  const auto certify = [&](double alpha) {
    CertificateResult out;
    for (const SubBox& sub : subs) {
      CertificateResult r =
          certify_alpha(sub.comp, sub.box, sub.J, cfg.cells, cfg.hat(alpha));
      if (r.status != CertStatus::certified) return r;
      r.iterations_used = std::max(r.iterations_used, out.iterations_used);
      out = std::move(r);
    }
    return out;
  };

  CertificateResult best = certify(cfg.d1);
  if (best.status != CertStatus::certified || cfg.d1 == cfg.d2) return best;

  double lo = cfg.d1, hi = cfg.d2;
  while (hi - lo > cfg.epsilon) {
    const auto m = std::max<std::int64_t>(
        2, static_cast<std::int64_t>(std::sqrt((hi - lo) / cfg.epsilon)));
    const double step = (hi - lo) / static_cast<double>(m);
    // Walk the grid upward; the first failure bounds the next level, so
    // each level pays for at most one failing certification.
    bool failed = false;
    for (std::int64_t k = 1; k <= m; ++k) {
      const double alpha = lo + static_cast<double>(k) * step;
      CertificateResult r = certify(alpha);
      if (r.status != CertStatus::certified) {
        hi = alpha;
        failed = true;
        break;
      }
      best = std::move(r);
      lo = alpha;
    }
    if (!failed) break;  // certified all the way to hi
  }
  return best;
}

BoundTable scan_range(const SimilarityScheme& scheme_family, double lambda_lo,
                      double lambda_hi, std::int64_t n_intervals,
                      double overlap_fraction, const SearchConfig& cfg,
                      std::int64_t workers, const BoundTable* prior) {
  if (n_intervals < 1 || lambda_lo == lambda_hi) return {};
  if (!(lambda_lo < lambda_hi) || !(lambda_hi < 1.0))
    throw std::invalid_argument("scan range must satisfy lo < hi < 1");
  if (!(overlap_fraction >= 0.0) || !(overlap_fraction < 1.0))
    throw std::invalid_argument("overlap fraction must lie in [0, 1)");

  const double len = lambda_hi - lambda_lo;
  const double nd = static_cast<double>(n_intervals);
  const double width =
      n_intervals == 1 ? len
                       : len / ((nd - 1.0) * (1.0 - overlap_fraction) + 1.0);
  const double stride = width * (1.0 - overlap_fraction);

  BoundTable table;
  table.rows.resize(static_cast<std::size_t>(n_intervals));
  std::atomic<std::int64_t> next{0};

  const auto work = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= n_intervals) return;
      Interval box{lambda_lo + static_cast<double>(i) * stride, 0.0};
      box.hi = (i == n_intervals - 1) ? lambda_hi : box.lo + width;

      SearchConfig box_cfg = cfg;
      if (prior) {
        // Warm start from the prior bound on the box midpoint.
        try {
          const double a = prior->lookup(0.5 * (box.lo + box.hi));
          box_cfg.d1 = std::max(cfg.d1, a - cfg.epsilon);
          box_cfg.d2 = std::min(1.0, a + 0.02);
          if (box_cfg.d2 < box_cfg.d1) box_cfg.d2 = box_cfg.d1;
        } catch (const std::out_of_range&) {
        }
      }

      const CertificateResult r = refine_bound(scheme_family, box, box_cfg);
      table.rows[static_cast<std::size_t>(i)] = {
          box.lo,
          box.hi,
          r.status == CertStatus::certified ? r.alpha : box_cfg.d1,
          r.status,
          r.iterations_used,
          cfg.cells};
    }
  };

  const auto n_threads = std::clamp<std::int64_t>(workers, 1, n_intervals);
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::int64_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return table;
}

bool near_one_check(double epsilon, double c, double grid_halfwidth,
                    std::int64_t n_points) {
  if (!(epsilon > 0.0) || !(epsilon < 0.5))
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  if (n_points < 2 || !(grid_halfwidth > 0.0))
    throw std::invalid_argument("need a nondegenerate symmetric grid");

  const double delta = 2.0 * epsilon - epsilon * epsilon;
  const double lambda = 1.0 - epsilon;
  const double alpha = 1.0 - c * epsilon;
  const auto f = [&](double x) {
    return std::exp(-delta * lambda * lambda * x * x);
  };
  std::vector<double> grid(static_cast<std::size_t>(n_points));
  for (std::int64_t k = 0; k < n_points; ++k)
    grid[static_cast<std::size_t>(k)] =
        grid_halfwidth * (2.0 * static_cast<double>(k) /
                              static_cast<double>(n_points - 1) -
                          1.0);
  const ComplementaryScheme comp =
      build_complementary(SimilarityScheme::bernoulli({lambda, lambda}));
  const double huge = std::numeric_limits<double>::max();
  return check_pointwise_d2(f, alpha, lambda, comp, grid, {-huge, huge});
}

}  // namespace dimcert
