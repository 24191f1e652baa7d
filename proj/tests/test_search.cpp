#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "dimcert/search.hpp"

using namespace dimcert;

namespace {

SearchConfig coarse() {
  SearchConfig cfg;
  cfg.d1 = 0.3;
  cfg.d2 = 1.0;
  cfg.epsilon = 1e-2;
  cfg.cells = 4000;
  cfg.max_iterations = 200;
  cfg.theta = 1e-6;
  return cfg;
}

}  // namespace

TEST_CASE("search config validation") {
  SearchConfig cfg = coarse();
  CHECK_NOTHROW(cfg.validate());
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = coarse();
  cfg.d1 = 0.9;
  cfg.d2 = 0.905;  // epsilon exceeds the bracket
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = coarse();
  cfg.d2 = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("refine at the exact Lebesgue parameter reaches 0.99") {
  const auto scheme = SimilarityScheme::bernoulli({0.5, 0.5});
  SearchConfig cfg = coarse();
  cfg.d1 = 0.9;
  const auto r = refine_bound(scheme, {0.5, 0.5}, cfg);
  REQUIRE(r.status == CertStatus::certified);
  CHECK(r.alpha >= 0.99);
  // The refined bound is itself re-certifiable with the same resources.
  const auto comp = build_complementary(scheme);
  const auto J = admissible_interval(comp, {0.5, 0.5}, cfg.margin);
  const auto again =
      certify_alpha(comp, {0.5, 0.5}, J, cfg.cells, cfg.hat(r.alpha));
  CHECK(again.status == CertStatus::certified);
}

TEST_CASE("degenerate bracket reduces to a single certification") {
  const auto scheme = SimilarityScheme::bernoulli({0.5, 0.5});
  SearchConfig cfg = coarse();
  cfg.d1 = cfg.d2 = 0.9;
  const auto r = refine_bound(scheme, {0.5, 0.5}, cfg);
  CHECK(r.status == CertStatus::certified);
  CHECK(r.alpha == 0.9);
}

TEST_CASE("failing start is reported inconclusive at d1") {
  const auto scheme = SimilarityScheme::bernoulli({0.25, 0.25});
  SearchConfig cfg = coarse();
  cfg.d1 = 0.9;  // true dimension is 0.5
  const auto r = refine_bound(scheme, {0.25, 0.25}, cfg);
  CHECK(r.status == CertStatus::inconclusive);
  CHECK(r.alpha == 0.9);
}

TEST_CASE("no-overlap Cantor parameter refines to just below one half") {
  const auto scheme = SimilarityScheme::bernoulli({0.25, 0.25});
  SearchConfig cfg = coarse();
  cfg.d1 = 0.3;
  const auto r = refine_bound(scheme, {0.25, 0.25}, cfg);
  REQUIRE(r.status == CertStatus::certified);
  CHECK(r.alpha > 0.4);
  CHECK(r.alpha < 0.5);  // exact self-similar dimension log2/log4
}

TEST_CASE("scan covers the range and is worker-count independent") {
  const auto scheme = SimilarityScheme::bernoulli({0.5, 0.5});
  SearchConfig cfg = coarse();
  cfg.cells = 2000;
  const auto t1 = scan_range(scheme, 0.5, 0.6, 5, 0.1, cfg, 1);
  const auto t4 = scan_range(scheme, 0.5, 0.6, 5, 0.1, cfg, 4);
  REQUIRE(t1.rows.size() == 5);
  CHECK(t1.rows.front().lambda_lo == 0.5);
  CHECK(t1.rows.back().lambda_hi == 0.6);
  for (std::size_t i = 0; i + 1 < t1.rows.size(); ++i)
    CHECK(t1.rows[i].lambda_hi >= t1.rows[i + 1].lambda_lo);  // no gaps
  for (std::size_t i = 0; i < t1.rows.size(); ++i) {
    CHECK(t1.rows[i].lambda_lo == t4.rows[i].lambda_lo);
    CHECK(t1.rows[i].alpha == t4.rows[i].alpha);
    CHECK(t1.rows[i].status == t4.rows[i].status);
  }
}

TEST_CASE("warm-started second pass does not lose ground") {
  const auto scheme = SimilarityScheme::bernoulli({0.5, 0.5});
  SearchConfig cfg = coarse();
  cfg.cells = 1000;
  const auto pass1 = scan_range(scheme, 0.5, 0.56, 3, 0.1, cfg, 2);
  SearchConfig cfg2 = cfg;
  cfg2.cells = 2000;
  const auto pass2 = scan_range(scheme, 0.5, 0.56, 3, 0.1, cfg2, 2, &pass1);
  for (std::size_t i = 0; i < pass1.rows.size(); ++i) {
    if (pass1.rows[i].status == CertStatus::certified) {
      CHECK(pass2.rows[i].status == CertStatus::certified);
      CHECK(pass2.rows[i].alpha >= pass1.rows[i].alpha - cfg.epsilon);
    }
  }
}

TEST_CASE("empty scan range gives an empty table") {
  const auto scheme = SimilarityScheme::bernoulli({0.5, 0.5});
  CHECK(scan_range(scheme, 0.5, 0.5, 0, 0.1, coarse()).rows.empty());
}

TEST_CASE("{0,1,3} below one third respects the exact dimension cap") {
  const auto scheme = SimilarityScheme::zero_one_three({0.3, 0.3});
  SearchConfig cfg = coarse();
  cfg.cells = 8000;
  const auto r = refine_bound(scheme, {0.3, 0.3}, cfg);
  REQUIRE(r.status == CertStatus::certified);
  CHECK(r.alpha < std::log(3.0) / std::log(1.0 / 0.3));
}

TEST_CASE("near-one Gaussian check") {
  CHECK(near_one_check(0.01, 1.6, 100.0, 10000));
  CHECK_FALSE(near_one_check(0.01, 1.0, 100.0, 10000));
  // alpha = 0 (c = 1/epsilon) holds trivially on the checked grid.
  CHECK(near_one_check(0.01, 100.0, 100.0, 10000));
  CHECK_THROWS_AS(near_one_check(0.7, 1.6, 100.0, 100), std::invalid_argument);
}
