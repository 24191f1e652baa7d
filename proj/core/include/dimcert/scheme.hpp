// Domain types for iterated function schemes of contracting similarities,
// their complementary difference schemes, admissible intervals, uniform
// partitions and piecewise-constant test functions.
//
// All types are immutable value types, safe to share across threads.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dimcert {

/// Closed interval of contraction ratios.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool degenerate() const { return lo == hi; }
};

/// An iterated function scheme x -> lambda*x + c_j with one shared ratio
/// (or a box of ratios) and a probability vector.
struct SimilarityScheme {
  Interval ratio_box;
  std::vector<double> translations;
  std::vector<double> probabilities;

  /// Throws std::invalid_argument if the invariants fail.
  void validate() const;

  static SimilarityScheme bernoulli(Interval ratio_box);
  static SimilarityScheme zero_one_three(Interval ratio_box);
};

/// An affine scheme with possibly distinct ratios per map.
struct AffineScheme {
  struct Map {
    double ratio;
    double translation;
  };
  std::vector<Map> maps;
  std::vector<double> probabilities;

  void validate() const;

  /// The n-map scheme with shared ratio, used to drive the asymmetric
  /// operator on the same data as a similarity scheme.
  static AffineScheme from_similarity(const SimilarityScheme& s, double ratio);
};

/// Pairwise translation differences d = c_i - c_j with merged product
/// weights. Always symmetric about 0 and always contains 0.
struct ComplementaryScheme {
  std::vector<double> differences;  // sorted ascending
  std::vector<double> weights;

  double max_abs_difference() const;
};

/// Symmetric interval J = [-a, a] whose interior contains the support
/// [-m, m] of the difference measure.
struct AdmissibleInterval {
  double half_width = 0.0;    // a
  double support_bound = 0.0; // m

  double lo() const { return -half_width; }
  double hi() const { return half_width; }
};

/// N equal cells tiling [lo, hi]. Cell edges are generated symmetrically
/// about the midpoint so that mirrored indices have bitwise-negated edges
/// when the interval is centred at 0.
struct UniformPartition {
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t cells = 0;

  double cell_width() const { return (hi - lo) / static_cast<double>(cells); }

  double edge(std::int64_t j) const {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    return mid + half * (static_cast<double>(2 * j - cells) /
                         static_cast<double>(cells));
  }

  /// Index of the cell containing x (clamped to [0, cells-1]).
  std::int64_t locate(double x) const;

  static UniformPartition over(double lo, double hi, std::int64_t cells);
  static UniformPartition of(const AdmissibleInterval& J, std::int64_t cells);

  bool operator==(const UniformPartition&) const = default;
};

/// Nonnegative piecewise-constant function, zero outside its partition.
struct StepFunction {
  UniformPartition partition;
  std::vector<double> values;

  double max_value() const;
  double min_value() const;

  static StepFunction indicator(const UniformPartition& p);
};

enum class CertStatus { certified, inconclusive };

std::string to_string(CertStatus s);

/// One row of a piecewise-constant lower-bound table.
struct BoundRow {
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  double alpha = 0.0;
  CertStatus status = CertStatus::inconclusive;
  std::int64_t iterations = 0;
  std::int64_t cells = 0;
};

/// Ordered rows covering a scanned parameter range without gaps.
struct BoundTable {
  std::vector<BoundRow> rows;

  /// Largest certified alpha among rows containing lambda;
  /// throws std::out_of_range if no certified row covers lambda.
  double lookup(double lambda) const;
};

// --- scheme_core operations -------------------------------------------

ComplementaryScheme build_complementary(const SimilarityScheme& scheme);

/// m = max|d| / (1 - lambda_max), a = (1 + margin) * m, outward-rounded.
/// Throws for lambda_max >= 1 and for the degenerate single-map scheme
/// (m = 0); callers must supply an explicit interval in that case.
AdmissibleInterval admissible_interval(const ComplementaryScheme& comp,
                                       Interval ratio_box, double margin);

/// True iff lambda_max * a + max|d| < a strictly, computed with
/// round-up arithmetic (ties fail).
bool check_admissibility(const AdmissibleInterval& J,
                         const ComplementaryScheme& comp, Interval ratio_box);

/// Lower bound at lambda in (0.8, 1) via the squaring reduction:
/// looks the table up at lambda^(2^k) for the minimal k >= 0 landing
/// in [0.5, 0.8]. Throws for lambda outside [0.5, 1).
double extend_by_squaring(const BoundTable& table, double lambda);

}  // namespace dimcert
