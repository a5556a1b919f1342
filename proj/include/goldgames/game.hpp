#ifndef GOLDGAMES_GAME_HPP
#define GOLDGAMES_GAME_HPP

#include <cstdint>
#include <vector>

namespace gg {

// p = (sqrt(5)-1)/2, the Bernoulli parameter of a golden game.
// Single definition shared by every module; satisfies phi^2 = 1 - phi.
double phi() noexcept;

// Materialized games are capped at 2^30 leaves (128 MiB of payoff bits);
// the streamed evaluator handles larger depths.
inline constexpr std::uint32_t kMaxMaterializedDepth = 30;

enum class Player { One, Two };  // Player::One maximizes, Player::Two minimizes

// Heights count distance above the leaves; the root of a depth-n game is at
// height n. Player 2 moves at odd heights (and therefore moves last).
// Throws std::invalid_argument for h == 0: leaves are terminal.
Player mover_at_height(std::uint32_t h);

// One realization of G_n: depth plus 2^n payoff bits, leaf i indexed
// left to right from 0.
class GameInstance {
 public:
  explicit GameInstance(std::uint32_t depth);

  std::uint32_t depth() const noexcept { return depth_; }
  std::uint64_t leaf_count() const noexcept { return std::uint64_t{1} << depth_; }

  bool leaf(std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set_leaf(std::uint64_t i, bool b) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (b) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
  }
  void flip_leaf(std::uint64_t i) {
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  bool operator==(const GameInstance&) const = default;

 private:
  std::uint32_t depth_;
  std::vector<std::uint64_t> words_;
};

// Deterministic description of one sampled game: identical specs yield
// bit-identical instances on every platform and under any parallel split.
struct SampleSpec {
  std::uint32_t depth = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;
};

// Counter-based Bernoulli draw for one leaf. Pure function of its inputs.
bool leaf_payoff(const SampleSpec& spec, std::uint64_t leaf_index);

// Materializes spec as a GameInstance. Throws for depth > kMaxMaterializedDepth.
GameInstance sample_game(const SampleSpec& spec);

// Minimax value by backward induction: max at even heights, min at odd.
int value(const GameInstance& game);

// Evaluates value(sample_game(spec)) without materializing the leaves;
// O(depth) memory, works for depths beyond kMaxMaterializedDepth.
int value_streamed(const SampleSpec& spec);

}  // namespace gg

#endif
