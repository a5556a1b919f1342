#include "goldgames/game.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gg {

double phi() noexcept {
  static const double v = (std::sqrt(5.0) - 1.0) / 2.0;
  return v;
}

Player mover_at_height(std::uint32_t h) {
  if (h == 0) throw std::invalid_argument("height 0 is a leaf; no mover");
  return (h & 1u) ? Player::Two : Player::One;
}

GameInstance::GameInstance(std::uint32_t depth) : depth_(depth) {
  if (depth > kMaxMaterializedDepth)
    throw std::invalid_argument("depth exceeds materialization limit");
  const std::uint64_t leaves = std::uint64_t{1} << depth;
  words_.assign((leaves + 63) / 64, 0);
}

namespace {

// SplitMix64-style finalizer over a per-leaf counter.
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t v) {
  v ^= v >> 30;
  v *= 0xBF58476D1CE4E5B9ull;
  v ^= v >> 27;
  v *= 0x94D049BB133111EBull;
  v ^= v >> 31;
  return v;
}

// Folds leaves left to right keeping one pending partial value per height.
// Bit h of the leaf index tells whether the node at height h+1 is complete.
template <typename LeafAt>
int fold_value(std::uint32_t depth, LeafAt&& leaf_at) {
  if (depth == 0) return leaf_at(0);
  std::array<int, 64> pending{};
  const std::uint64_t leaves = std::uint64_t{1} << depth;
  int v = 0;
  for (std::uint64_t i = 0; i < leaves; ++i) {
    v = leaf_at(i);
    std::uint32_t h = 0;
    while (h < depth && ((i >> h) & 1u)) {
      // node at height h+1: max for Player 1 (even height), min for Player 2
      const bool maximize = ((h + 1) & 1u) == 0;
      v = maximize ? (pending[h] | v) : (pending[h] & v);
      ++h;
    }
    if (h < depth) pending[h] = v;
  }
  return v;
}

}  // namespace

bool leaf_payoff(const SampleSpec& spec, std::uint64_t leaf_index) {
  // Two-stage counter scheme: derive a stream key per (seed, sample) pair
  // first, then finalize the leaf counter. A single affine combination of
  // sample and leaf indices would collide across adjacent samples.
  const std::uint64_t stream = mix(spec.seed + spec.sample_index * kGamma);
  const std::uint64_t counter = stream + (leaf_index + 1) * kGamma;
  const double u =
      static_cast<double>(mix(counter) >> 11) * 0x1.0p-53;
  return u < spec.p;
}

GameInstance sample_game(const SampleSpec& spec) {
  GameInstance game(spec.depth);
  const std::uint64_t leaves = game.leaf_count();
  for (std::uint64_t i = 0; i < leaves; ++i)
    game.set_leaf(i, leaf_payoff(spec, i));
  return game;
}

int value(const GameInstance& game) {
  return fold_value(game.depth(),
                    [&](std::uint64_t i) { return game.leaf(i) ? 1 : 0; });
}

int value_streamed(const SampleSpec& spec) {
  return fold_value(spec.depth, [&](std::uint64_t i) {
    return leaf_payoff(spec, i) ? 1 : 0;
  });
}

}  // namespace gg
