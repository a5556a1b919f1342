#ifndef GOLDGAMES_FRAGILITY_HPP
#define GOLDGAMES_FRAGILITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "goldgames/game.hpp"

namespace gg {

// Minimum number of leaf flips to force each root value. Exactly one of the
// two costs is zero (the achieved value costs nothing).
struct CostPair {
  std::uint64_t to_zero = 0;
  std::uint64_t to_one = 0;

  bool operator==(const CostPair&) const = default;
};

struct FragilityReport {
  int value = 0;
  std::uint64_t fragility = 0;
  std::vector<std::uint64_t> witness;  // sorted leaf indices, |witness| == fragility
};

// Bottom-up DP: at a leaf with payoff b, cost to b is 0 and cost to 1-b is 1.
// At an internal node whose mover prefers value t, cost to t is the min over
// children and cost to 1-t is the sum over children.
CostPair cost_pair(const GameInstance& game);

// Hamming distance to the opposite value class: max of the cost pair.
std::uint64_t fragility(const GameInstance& game);

inline bool is_fragile(const GameInstance& game, std::uint64_t d) {
  return fragility(game) <= d;
}

// Retraces the DP to one minimal flip set. Ties at a min-choice go to the
// left child; summed branches concatenate left then right.
FragilityReport witness(const GameInstance& game);

// Independent oracle: minimum k <= cap over all leaf subsets of size k whose
// flip changes the value; nullopt if none within cap. Throws when the
// enumeration C(2^depth, k) is infeasibly large.
std::optional<std::uint64_t> brute_force_fragility(const GameInstance& game,
                                                   std::uint64_t cap);

}  // namespace gg

#endif
