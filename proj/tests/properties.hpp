// Randomized property checks shared by the unit suite (small case counts)
// and the acceptance gate (>= 1000 cases each). Every function returns the
// number of failing cases; deterministic via the caller-supplied seed.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dimcert/asymmetric.hpp"
#include "dimcert/oracle.hpp"
#include "dimcert/scheme.hpp"
#include "dimcert/symmetric.hpp"

namespace dimcert::props {

struct Rig {
  std::mt19937 rng;
  explicit Rig(std::uint32_t seed) : rng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  SimilarityScheme scheme() {
    const auto k = integer(2, 4);
    std::vector<double> c, p;
    double sum = 0.0;
    for (std::int64_t i = 0; i < k; ++i) {
      c.push_back(static_cast<double>(integer(-3, 3)));
      p.push_back(uniform(0.1, 1.0));
      sum += p.back();
    }
    c[0] = 0.0;
    c[1] = c[0] + static_cast<double>(integer(1, 3));  // nondegenerate
    for (double& x : p) x /= sum;
    const double lo = uniform(0.3, 0.7);
    return {{lo, lo + uniform(0.0, 0.05)}, c, p};
  }

  StepFunction step(const UniformPartition& part, double cap = 1.0) {
    StepFunction f{part, {}};
    for (std::int64_t i = 0; i < part.cells; ++i)
      f.values.push_back(uniform(0.0, cap));
    return f;
  }
};

inline int operator_monotonicity(std::uint32_t seed, int cases) {
  Rig rig(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const auto s = rig.scheme();
    const auto comp = build_complementary(s);
    const auto J = admissible_interval(comp, s.ratio_box, 0.1);
    const auto part = UniformPartition::of(J, rig.integer(8, 64));
    StepFunction f = rig.step(part);
    StepFunction g = f;
    for (double& v : g.values) v += rig.uniform(0.0, 0.5);
    const double alpha = rig.uniform(0.0, 1.0);
    const auto df = apply_d2_discrete(f, alpha, s.ratio_box, comp);
    const auto dg = apply_d2_discrete(g, alpha, s.ratio_box, comp);
    for (std::size_t i = 0; i < df.values.size(); ++i)
      if (df.values[i] > dg.values[i]) ++failures;
  }
  return failures;
}

inline int hat_contraction(std::uint32_t seed, int cases) {
  Rig rig(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const auto part = UniformPartition::over(-1, 1, rig.integer(4, 32));
    const auto applied = rig.step(part, 2.0);
    const auto previous = rig.step(part, 2.0);
    const auto out = hat_step(applied, previous, rig.uniform(1e-8, 1e-2));
    for (std::size_t i = 0; i < out.values.size(); ++i)
      if (out.values[i] > previous.values[i]) ++failures;
  }
  return failures;
}

// The discretized cell value dominates the exact operator at sampled
// points of the cell and sampled ratios in the box.
inline int discrete_dominates_exact(std::uint32_t seed, int cases) {
  Rig rig(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const auto s = rig.scheme();
    const auto comp = build_complementary(s);
    const auto J = admissible_interval(comp, s.ratio_box, 0.1);
    const auto part = UniformPartition::of(J, rig.integer(8, 48));
    const auto psi = rig.step(part);
    const double alpha = rig.uniform(0.0, 1.0);
    const auto out = apply_d2_discrete(psi, alpha, s.ratio_box, comp);

    const auto eval = [&](double y) {
      if (y < part.lo || y >= part.hi) return 0.0;
      return psi.values[static_cast<std::size_t>(part.locate(y))];
    };
    for (int probe = 0; probe < 8; ++probe) {
      const double x = rig.uniform(part.lo, part.hi);
      const double lambda =
          rig.uniform(s.ratio_box.lo, s.ratio_box.hi);
      double exact = 0.0;
      for (std::size_t i = 0; i < comp.differences.size(); ++i)
        exact += comp.weights[i] * eval((x - comp.differences[i]) / lambda);
      exact *= std::pow(lambda, -alpha);
      if (exact >
          out.values[static_cast<std::size_t>(part.locate(x))] * (1 + 1e-12))
        ++failures;
    }
  }
  return failures;
}

// A certificate at N cells survives at 2N cells: the doubled-grid output
// never exceeds the parent's output on the covering parent cell.
inline int refinement_monotonicity(std::uint32_t seed, int cases) {
  Rig rig(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const auto s = rig.scheme();
    const auto comp = build_complementary(s);
    const auto J = admissible_interval(comp, s.ratio_box, 0.1);
    const auto n = rig.integer(8, 32);
    const auto coarse = UniformPartition::of(J, n);
    const auto fine = UniformPartition::of(J, 2 * n);
    const auto psi = rig.step(coarse);
    StepFunction split{fine, {}};
    for (std::int64_t i = 0; i < 2 * n; ++i)
      split.values.push_back(psi.values[static_cast<std::size_t>(i / 2)]);
    const double alpha = rig.uniform(0.0, 1.0);
    const auto parent = apply_d2_discrete(psi, alpha, s.ratio_box, comp);
    const auto child = apply_d2_discrete(split, alpha, s.ratio_box, comp);
    for (std::int64_t i = 0; i < 2 * n; ++i)
      if (child.values[static_cast<std::size_t>(i)] >
          parent.values[static_cast<std::size_t>(i / 2)])
        ++failures;
  }
  return failures;
}

// Shrinking theta never raises the iterate.
inline int theta_monotonicity(std::uint32_t seed, int cases) {
  Rig rig(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const auto s = rig.scheme();
    const auto comp = build_complementary(s);
    const auto J = admissible_interval(comp, s.ratio_box, 0.1);
    const double theta = rig.uniform(1e-5, 1e-2);
    const double alpha = rig.uniform(0.1, 0.6);
    const auto steps = rig.integer(2, 8);
    const auto big =
        hat_iterate(comp, s.ratio_box, J, 32, alpha, theta, steps);
    const auto small =
        hat_iterate(comp, s.ratio_box, J, 32, alpha, theta / 10.0, steps);
    for (std::size_t i = 0; i < big.values.size(); ++i)
      if (small.values[i] > big.values[i]) ++failures;
  }
  return failures;
}

inline int even_symmetry(std::uint32_t seed, int cases) {
  Rig rig(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const auto s = rig.scheme();
    const auto comp = build_complementary(s);
    const auto J = admissible_interval(comp, s.ratio_box, 0.1);
    const auto n = rig.integer(8, 64);
    const auto part = UniformPartition::of(J, n);
    StepFunction psi = rig.step(part);
    for (std::int64_t i = 0; i < n / 2; ++i)
      psi.values[static_cast<std::size_t>(n - 1 - i)] =
          psi.values[static_cast<std::size_t>(i)];
    const auto out =
        apply_d2_discrete(psi, rig.uniform(0.0, 1.0), s.ratio_box, comp);
    for (std::int64_t i = 0; i < n; ++i)
      if (out.values[static_cast<std::size_t>(i)] !=
          out.values[static_cast<std::size_t>(n - 1 - i)])
        ++failures;
  }
  return failures;
}

// Asymmetric operator on the complementary 3-map Bernoulli scheme equals
// the symmetric operator on the pair, cellwise and exactly.
inline int d1_d2_equality(std::uint32_t seed, int cases) {
  Rig rig(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const double lambda =
        static_cast<double>(rig.integer(300, 700)) / 1024.0;  // exact
    const Interval box{lambda, lambda};
    const auto comp = build_complementary(SimilarityScheme::bernoulli(box));
    const AffineScheme three{
        {{lambda, -1.0}, {lambda, 0.0}, {lambda, 1.0}}, {0.25, 0.5, 0.25}};
    const auto J = admissible_interval(comp, box, 0.1);
    const auto psi = rig.step(UniformPartition::of(J, rig.integer(8, 96)));
    const double alpha = rig.uniform(0.0, 1.0);
    const auto d2 = apply_d2_discrete(psi, alpha, box, comp);
    const auto d1 = apply_d1_discrete(psi, alpha, three);
    if (d1.values != d2.values) ++failures;
  }
  return failures;
}

inline int oracle_conservation(std::uint32_t seed, int cases) {
  Rig rig(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    auto s = rig.scheme();
    s.ratio_box.hi = s.ratio_box.lo;
    const auto atoms = finite_level_atoms(s, rig.integer(1, 8));
    double sum = 0.0;
    for (double w : atoms.weights) sum += w;
    if (std::abs(sum - 1.0) >
        16.0 * std::numeric_limits<double>::epsilon() *
            static_cast<double>(atoms.weights.size()))
      ++failures;
    double prev = 0.0;
    for (double r = 1e-4; r < 16.0; r *= 4.0) {
      const double c = correlation_sum(atoms, r);
      if (c < prev) ++failures;
      prev = c;
    }
  }
  return failures;
}

inline int complementary_symmetry(std::uint32_t seed, int cases) {
  Rig rig(seed);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    const auto comp = build_complementary(rig.scheme());
    double sum = 0.0;
    for (double q : comp.weights) sum += q;
    if (std::abs(sum - 1.0) >
        8.0 * std::numeric_limits<double>::epsilon() *
            static_cast<double>(comp.weights.size() + 1))
      ++failures;
    const std::size_t n = comp.differences.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (comp.differences[i] != -comp.differences[n - 1 - i]) ++failures;
      if (comp.weights[i] != comp.weights[n - 1 - i]) ++failures;
    }
  }
  return failures;
}

}  // namespace dimcert::props
