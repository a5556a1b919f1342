// Exercises the shared-library surface end to end, C linkage only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "goldgames.h"

TEST_CASE("phi constant") {
  CHECK(std::fabs(gg_phi() - (std::sqrt(5.0) - 1.0) / 2.0) < 1e-16);
}

TEST_CASE("game lifecycle, value, fragility, witness") {
  gg_game* game = nullptr;
  const uint8_t bits[4] = {1, 0, 0, 1};
  REQUIRE(gg_game_from_bits(2, bits, &game) == GG_OK);
  CHECK(gg_game_depth(game) == 2);
  CHECK(gg_game_leaf_count(game) == 4);
  CHECK(gg_game_leaf(game, 0) == 1);
  CHECK(gg_game_leaf(game, 1) == 0);
  CHECK(gg_game_value(game) == 0);

  uint64_t c0 = 99, c1 = 99;
  REQUIRE(gg_game_cost_pair(game, &c0, &c1) == GG_OK);
  CHECK(c0 == 0);
  CHECK(c1 == 1);
  CHECK(gg_game_fragility(game) == 1);

  uint64_t buf[4];
  uint64_t len = 0;
  int value = -1;
  REQUIRE(gg_game_witness(game, &value, buf, 4, &len) == GG_OK);
  CHECK(value == 0);
  CHECK(len == 1);
  CHECK(buf[0] == 1);

  uint64_t bf = 0;
  int over = -1;
  REQUIRE(gg_game_brute_force_fragility(game, 2, &bf, &over) == GG_OK);
  CHECK(over == 0);
  CHECK(bf == 1);

  gg_game_free(game);
}

TEST_CASE("sampling determinism across the C surface") {
  gg_game* a = nullptr;
  gg_game* b = nullptr;
  REQUIRE(gg_game_sample(8, gg_phi(), 42, 3, &a) == GG_OK);
  REQUIRE(gg_game_sample(8, gg_phi(), 42, 3, &b) == GG_OK);
  for (uint64_t i = 0; i < gg_game_leaf_count(a); ++i) {
    CHECK(gg_game_leaf(a, i) == gg_game_leaf(b, i));
    CHECK(gg_game_leaf(a, i) == gg_leaf_payoff(8, gg_phi(), 42, 3, i));
  }
  CHECK(gg_value_streamed(8, gg_phi(), 42, 3) == gg_game_value(a));
  gg_game_free(a);
  gg_game_free(b);
}

TEST_CASE("file round trip and parse error reporting") {
  const std::string path = "capi_roundtrip.ggame";
  gg_game* game = nullptr;
  REQUIRE(gg_game_sample(5, gg_phi(), 7, 0, &game) == GG_OK);
  REQUIRE(gg_game_write_file(game, path.c_str(), 1) == GG_OK);

  gg_game* loaded = nullptr;
  REQUIRE(gg_game_read_file(path.c_str(), &loaded) == GG_OK);
  for (uint64_t i = 0; i < gg_game_leaf_count(game); ++i)
    CHECK(gg_game_leaf(game, i) == gg_game_leaf(loaded, i));
  gg_game_free(game);
  gg_game_free(loaded);
  std::remove(path.c_str());

  // malformed file reports a parse error with an offset in the message
  FILE* f = std::fopen(path.c_str(), "wb");
  REQUIRE(f != nullptr);
  std::fputs("GGAME v1 depth=2\n01\n", f);
  std::fclose(f);
  gg_game* bad = nullptr;
  CHECK(gg_game_read_file(path.c_str(), &bad) == GG_ERR_PARSE);
  CHECK(std::string(gg_last_error()).find("byte offset") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("exact table and theory table") {
  std::vector<gg_exact_row> rows(2);
  REQUIRE(gg_exact_table(1, gg_phi(), 1, rows.data()) == GG_OK);
  CHECK(rows[0].F[0] == 1.0);
  const double phi4 = std::pow(gg_phi(), 4);
  CHECK(std::fabs(rows[1].F[0] - (1.0 - phi4)) < 1e-12);

  gg_theory_row theory[3];
  REQUIRE(gg_theory_table(3, theory) == GG_OK);
  CHECK(std::fabs(theory[0].xi - gg_phi() / 2.0) < 1e-15);
  CHECK(std::fabs(theory[0].F - 5.0 * gg_phi() / 4.0) < 1e-15);

  CHECK(gg_theory_table(0, theory) == GG_ERR_INVALID_ARGUMENT);
  CHECK(gg_exact_table(1, 1.5, 1, rows.data()) == GG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("finite alpha/beta through the C surface") {
  const uint32_t dmax = 2, nmax = 2;
  std::vector<double> alpha((nmax + 1) * dmax), beta((nmax + 1) * dmax);
  REQUIRE(gg_finite_alpha_beta(dmax, nmax, alpha.data(), beta.data()) == GG_OK);
  CHECK(alpha[0] == 0.0);
  CHECK(std::fabs(beta[1 * dmax + 0] - std::pow(gg_phi(), 3)) < 1e-15);
  CHECK(std::fabs(alpha[2 * dmax + 0] - std::pow(gg_phi(), 3)) < 1e-15);
}

TEST_CASE("monte carlo estimate via C API is worker independent") {
  gg_mc_request req{10, gg_phi(), 2, 5000, 123, 1};
  gg_mc_result one, eight;
  REQUIRE(gg_mc_estimate(&req, &one) == GG_OK);
  req.workers = 8;
  REQUIRE(gg_mc_estimate(&req, &eight) == GG_OK);
  for (int v = 0; v < 2; ++v)
    for (int c = 0; c <= 2; ++c) CHECK(one.counts[v][c] == eight.counts[v][c]);
  CHECK(one.prob_v1.est == eight.prob_v1.est);
  CHECK(one.F[0].est == eight.F[0].est);
  CHECK(one.F[1].hi == eight.F[1].hi);
}

TEST_CASE("verify bundle passes") {
  char* report = nullptr;
  int passed = 0;
  REQUIRE(gg_verify(3, 8, &report, &passed) == GG_OK);
  CHECK(passed == 1);
  CHECK(std::string(report).find("PASS") != std::string::npos);
  gg_string_free(report);
}
