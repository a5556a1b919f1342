#ifndef GOLDGAMES_DISTRIBUTION_HPP
#define GOLDGAMES_DISTRIBUTION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "goldgames/game.hpp"

namespace gg {

inline constexpr int kMaxCap = 16;
inline constexpr int kMaxExactDepth = 64;

// Exact law of (root value, flips-to-overturn truncated at cap) under the
// i.i.d. leaf measure. prob[v][j] is the mass on value v with flip cost j+1;
// the last slot (j == cap) holds the mass with cost > cap.
struct CappedCostDistribution {
  int cap = 1;
  std::array<std::vector<double>, 2> prob;

  double total_mass() const;
  double mass_value(int v) const;
  // Mass with value v and flip cost strictly greater than d (d <= cap).
  double tail(int v, int d) const;
};

// Bernoulli leaf: mass p on (1, cost 1), mass 1-p on (0, cost 1).
CappedCostDistribution leaf_distribution(double p, int cap);

// One backward-induction level over two i.i.d. children. Costs to the
// mover's preferred value take the min over children; costs to the other
// value add, saturating past cap. Renormalized so mass stays exactly 1
// (squaring the mass would otherwise double rounding error per level).
CappedCostDistribution combine(const CappedCostDistribution& child, Player mover);

struct ExactRow {
  int n = 0;
  double prob_v1 = 0.0;
  std::vector<double> F;      // F[d-1] = F_n(d), d = 1..cap
  std::vector<double> alpha;  // Pr[not d-fragile | V=1]; NaN when Pr[V=1] = 0
  std::vector<double> beta;   // Pr[not d-fragile | V=0]; NaN when Pr[V=0] = 0
};

// Rows for n = 0..depth at leaf parameter p, costs capped at `cap`.
std::vector<ExactRow> exact_table(int depth, double p, int cap);

// Cheap value-marginal recursion: q -> q^2 at odd heights, 1-(1-q)^2 at even.
// Returns Pr[V_n = 1] for n = 0..depth.
std::vector<double> value_prob_iterate(double p, int depth);

}  // namespace gg

#endif
