#include <doctest.h>

#include <stdexcept>

#include "goldgames/fragility.hpp"
#include "goldgames/game.hpp"

using namespace gg;

namespace {

GameInstance make_game(std::uint32_t depth, std::initializer_list<int> bits) {
  GameInstance game(depth);
  std::uint64_t i = 0;
  for (int b : bits) game.set_leaf(i++, b != 0);
  return game;
}

GameInstance game_from_mask(std::uint32_t depth, std::uint64_t mask) {
  GameInstance game(depth);
  for (std::uint64_t i = 0; i < game.leaf_count(); ++i)
    game.set_leaf(i, (mask >> i) & 1);
  return game;
}

}  // namespace

TEST_CASE("cost_pair examples") {
  CHECK(cost_pair(make_game(0, {0})) == CostPair{0, 1});
  CHECK(cost_pair(make_game(1, {0, 0})) == CostPair{0, 2});
  CHECK(cost_pair(make_game(2, {1, 0, 0, 1})) == CostPair{0, 1});
}

TEST_CASE("fragility examples") {
  CHECK(fragility(make_game(1, {1, 1})) == 1);
  CHECK(fragility(make_game(1, {0, 0})) == 2);
  CHECK(fragility(make_game(0, {1})) == 1);
}

TEST_CASE("witness examples with left-preference tie-break") {
  CHECK(witness(make_game(1, {1, 1})).witness == std::vector<std::uint64_t>{0});
  CHECK(witness(make_game(1, {0, 0})).witness == std::vector<std::uint64_t>{0, 1});
  CHECK(witness(make_game(2, {1, 0, 0, 1})).witness == std::vector<std::uint64_t>{1});
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_fragility(make_game(1, {0, 0}), 3) == 2);
  CHECK(brute_force_fragility(make_game(2, {1, 0, 0, 1}), 2) == 1);
}

TEST_CASE("DP equals exhaustive oracle on every game, n <= 3") {
  for (std::uint32_t n = 0; n <= 3; ++n) {
    const std::uint64_t leaves = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << leaves); ++mask) {
      const GameInstance game = game_from_mask(n, mask);
      CAPTURE(n);
      CAPTURE(mask);
      CHECK(brute_force_fragility(game, leaves) == fragility(game));
    }
  }
}

TEST_CASE("cost pair normalization: exactly one zero cost") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    const GameInstance game = sample_game({7, phi(), 0xF00Dull, k});
    const CostPair c = cost_pair(game);
    CHECK(std::min(c.to_zero, c.to_one) == 0);
    CHECK(std::max(c.to_zero, c.to_one) >= 1);
    CHECK((c.to_one == 0 ? 1 : 0) == value(game));
  }
}

TEST_CASE("witness validity and size over random games") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    GameInstance game = sample_game({8, phi(), 0xABCull, k});
    const FragilityReport rep = witness(game);
    CHECK(rep.value == value(game));
    CHECK(rep.witness.size() == rep.fragility);
    CHECK(std::is_sorted(rep.witness.begin(), rep.witness.end()));
    for (std::uint64_t i : rep.witness) game.flip_leaf(i);
    CHECK(value(game) != rep.value);
  }
}

TEST_CASE("witness minimality for small depths and fragility <= 3") {
  for (std::uint32_t n = 0; n <= 4; ++n) {
    for (std::uint64_t k = 0; k < 40; ++k) {
      const GameInstance game = sample_game({n, phi(), 0x1234ull, k});
      const std::uint64_t frag = fragility(game);
      if (frag > 3 || frag == 1) continue;
      const auto smaller = brute_force_fragility(game, frag - 1);
      CHECK_FALSE(smaller.has_value());
    }
  }
}

TEST_CASE("flip budget is monotone") {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const GameInstance game = sample_game({6, phi(), 0x777ull, k});
    const std::uint64_t frag = fragility(game);
    for (std::uint64_t d = 1; d <= game.leaf_count(); ++d) {
      CHECK(is_fragile(game, d) == (frag <= d));
      if (is_fragile(game, d)) CHECK(is_fragile(game, d + 1));
    }
  }
}

TEST_CASE("brute force guards infeasible enumerations") {
  const GameInstance game = sample_game({20, phi(), 1, 0});
  CHECK_THROWS_AS(brute_force_fragility(game, 8), std::invalid_argument);
}
