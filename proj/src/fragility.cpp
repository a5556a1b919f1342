#include "goldgames/fragility.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace gg {

namespace {

std::uint64_t cost_to(const CostPair& c, int target) {
  return target == 0 ? c.to_zero : c.to_one;
}

CostPair combine_costs(const CostPair& left, const CostPair& right,
                       std::uint32_t height) {
  // mover at even heights prefers 1 (Player 1), at odd heights 0 (Player 2)
  const int t = (height & 1u) ? 0 : 1;
  CostPair out;
  const std::uint64_t to_t = std::min(cost_to(left, t), cost_to(right, t));
  const std::uint64_t to_o = cost_to(left, 1 - t) + cost_to(right, 1 - t);
  if (t == 1) { out.to_one = to_t; out.to_zero = to_o; }
  else { out.to_zero = to_t; out.to_one = to_o; }
  return out;
}

CostPair leaf_costs(bool payoff) {
  return payoff ? CostPair{1, 0} : CostPair{0, 1};
}

// Cost pair of the subtree whose leaves are [first, first + 2^height).
CostPair subtree_costs(const GameInstance& game, std::uint64_t first,
                       std::uint32_t height) {
  if (height == 0) return leaf_costs(game.leaf(first));
  std::array<CostPair, kMaxMaterializedDepth> pending{};
  const std::uint64_t leaves = std::uint64_t{1} << height;
  CostPair c;
  for (std::uint64_t i = 0; i < leaves; ++i) {
    c = leaf_costs(game.leaf(first + i));
    std::uint32_t h = 0;
    while (h < height && ((i >> h) & 1u)) {
      c = combine_costs(pending[h], c, h + 1);
      ++h;
    }
    if (h < height) pending[h] = c;
  }
  return c;
}

// Collects a minimal flip set forcing the subtree to `target`, retracing the
// DP. Ties at a min-choice go left; summed branches emit left then right,
// which keeps the output sorted.
void collect_witness(const GameInstance& game, std::uint64_t first,
                     std::uint32_t height, int target,
                     std::vector<std::uint64_t>& out) {
  if (height == 0) {
    if ((game.leaf(first) ? 1 : 0) != target) out.push_back(first);
    return;
  }
  const std::uint64_t half = std::uint64_t{1} << (height - 1);
  const int t = (height & 1u) ? 0 : 1;
  if (target == t) {
    const std::uint64_t cl = cost_to(subtree_costs(game, first, height - 1), target);
    const std::uint64_t cr =
        cost_to(subtree_costs(game, first + half, height - 1), target);
    if (cl <= cr) collect_witness(game, first, height - 1, target, out);
    else collect_witness(game, first + half, height - 1, target, out);
  } else {
    collect_witness(game, first, height - 1, target, out);
    collect_witness(game, first + half, height - 1, target, out);
  }
}

}  // namespace

CostPair cost_pair(const GameInstance& game) {
  return subtree_costs(game, 0, game.depth());
}

std::uint64_t fragility(const GameInstance& game) {
  const CostPair c = cost_pair(game);
  return std::max(c.to_zero, c.to_one);
}

FragilityReport witness(const GameInstance& game) {
  FragilityReport report;
  const CostPair c = cost_pair(game);
  report.value = c.to_one == 0 ? 1 : 0;
  report.fragility = std::max(c.to_zero, c.to_one);
  collect_witness(game, 0, game.depth(), 1 - report.value, report.witness);
  return report;
}

std::optional<std::uint64_t> brute_force_fragility(const GameInstance& game,
                                                   std::uint64_t cap) {
  const std::uint64_t n = game.leaf_count();
  constexpr std::uint64_t kEnumLimit = 200'000'000;

  // total subsets up to size cap, with overflow saturation
  std::uint64_t total = 0, binom = 1;
  for (std::uint64_t k = 1; k <= std::min(cap, n); ++k) {
    if (binom > kEnumLimit) { total = kEnumLimit + 1; break; }
    binom = binom * (n - k + 1) / k;
    if (binom > kEnumLimit - total) { total = kEnumLimit + 1; break; }
    total += binom;
  }
  if (total > kEnumLimit)
    throw std::invalid_argument("brute-force enumeration infeasibly large");

  const int v0 = value(game);
  GameInstance scratch = game;
  std::vector<std::uint64_t> idx;
  for (std::uint64_t k = 1; k <= std::min(cap, n); ++k) {
    idx.resize(k);
    for (std::uint64_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      for (std::uint64_t i : idx) scratch.flip_leaf(i);
      const bool changed = value(scratch) != v0;
      for (std::uint64_t i : idx) scratch.flip_leaf(i);
      if (changed) return k;
      // next k-combination of {0..n-1}
      std::uint64_t j = k;
      while (j > 0 && idx[j - 1] == n - k + (j - 1)) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::uint64_t m = j; m < k; ++m) idx[m] = idx[m - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace gg
