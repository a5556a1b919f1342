#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "goldgames/distribution.hpp"
#include "goldgames/game.hpp"
#include "goldgames/montecarlo.hpp"

using namespace gg;

TEST_CASE("wilson interval basics") {
  const Interval all = wilson_interval(1000, 1000);
  CHECK(all.est == 1.0);
  CHECK(all.hi <= 1.0 + 1e-12);
  CHECK(all.lo > 0.99);

  const Interval none = wilson_interval(0, 1000);
  CHECK(none.est == 0.0);
  CHECK(none.lo >= -1e-12);

  const Interval half = wilson_interval(500, 1000);
  CHECK(half.est == 0.5);
  CHECK(half.lo < 0.5);
  CHECK(half.hi > 0.5);

  CHECK_THROWS_AS(wilson_interval(0, 0), std::invalid_argument);
}

TEST_CASE("degenerate p = 1 gives prob_v1 = 1 exactly") {
  const EstimationResult res = estimate({8, 1.0, 1, 1000, 7, 2});
  CHECK(res.prob_v1.est == 1.0);
  std::uint64_t total = 0;
  for (auto c : res.counts) total += c;
  CHECK(total == res.samples);
}

TEST_CASE("worker count never changes any output bit") {
  const EstimationRequest base{10, phi(), 3, 20'000, 0xFEEDull, 1};
  EstimationRequest wide = base;
  wide.workers = 8;
  const EstimationResult a = estimate(base);
  const EstimationResult b = estimate(wide);
  CHECK(a.counts == b.counts);
  CHECK(a.prob_v1.est == b.prob_v1.est);
  CHECK(a.prob_v1.lo == b.prob_v1.lo);
  CHECK(a.prob_v1.hi == b.prob_v1.hi);
  for (std::size_t d = 0; d < a.F.size(); ++d) {
    CHECK(a.F[d].est == b.F[d].est);
    CHECK(a.F[d].lo == b.F[d].lo);
    CHECK(a.F[d].hi == b.F[d].hi);
  }
}

TEST_CASE("empirical frequencies agree with the exact DP at depth 12") {
  const int dmax = 3;
  const std::uint64_t samples = 200'000;
  const EstimationResult res = estimate({12, phi(), dmax, samples, 0x9Aull, 4});
  const auto exact = exact_table(12, phi(), dmax);
  const auto& row = exact[12];

  auto wilson_se = [](const Interval& iv) {
    return (iv.hi - iv.lo) / (2.0 * 1.959964);
  };
  CHECK(std::fabs(res.prob_v1.est - row.prob_v1) <= 4.0 * wilson_se(res.prob_v1));
  for (int d = 1; d <= dmax; ++d)
    CHECK(std::fabs(res.F[d - 1].est - row.F[d - 1]) <= 4.0 * wilson_se(res.F[d - 1]));
}

TEST_CASE("request validation") {
  CHECK_THROWS_AS(estimate({8, 0.5, 1, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(estimate({31, 0.5, 1, 10, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(estimate({8, 0.5, 17, 10, 0, 1}), std::invalid_argument);
}
