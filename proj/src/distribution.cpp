#include "goldgames/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gg {

namespace {

void check_cap(int cap) {
  if (cap < 1 || cap > kMaxCap)
    throw std::invalid_argument("cap must be in [1, 16]");
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("p must be in [0, 1]");
}

}  // namespace

double CappedCostDistribution::total_mass() const {
  double s = 0.0;
  for (int v = 0; v < 2; ++v)
    for (double m : prob[v]) s += m;
  return s;
}

double CappedCostDistribution::mass_value(int v) const {
  double s = 0.0;
  for (double m : prob[v]) s += m;
  return s;
}

double CappedCostDistribution::tail(int v, int d) const {
  // slot j holds cost j+1; slot `cap` holds cost > cap
  double s = 0.0;
  for (int j = d; j <= cap; ++j) s += prob[v][static_cast<std::size_t>(j)];
  return s;
}

CappedCostDistribution leaf_distribution(double p, int cap) {
  check_p(p);
  check_cap(cap);
  CappedCostDistribution dist;
  dist.cap = cap;
  dist.prob[0].assign(static_cast<std::size_t>(cap) + 1, 0.0);
  dist.prob[1].assign(static_cast<std::size_t>(cap) + 1, 0.0);
  dist.prob[1][0] = p;
  dist.prob[0][0] = 1.0 - p;
  return dist;
}

CappedCostDistribution combine(const CappedCostDistribution& child, Player mover) {
  const int cap = child.cap;
  const int over = cap;  // slot index of the > cap bucket
  const int t = mover == Player::One ? 1 : 0;

  CappedCostDistribution out;
  out.cap = cap;
  out.prob[0].assign(static_cast<std::size_t>(cap) + 1, 0.0);
  out.prob[1].assign(static_cast<std::size_t>(cap) + 1, 0.0);

  for (int v1 = 0; v1 < 2; ++v1) {
    for (int j1 = 0; j1 <= cap; ++j1) {
      const double q1 = child.prob[v1][static_cast<std::size_t>(j1)];
      if (q1 == 0.0) continue;
      const int c1 = j1 + 1;  // flip cost of child 1 (cap+1 means > cap)
      for (int v2 = 0; v2 < 2; ++v2) {
        for (int j2 = 0; j2 <= cap; ++j2) {
          const double q2 = child.prob[v2][static_cast<std::size_t>(j2)];
          if (q2 == 0.0) continue;
          const int c2 = j2 + 1;
          // child cost toward x is 0 if it already has value x, else its
          // flip cost; min toward the mover's target, saturating sum away
          const int to_t = std::min(v1 == t ? 0 : c1, v2 == t ? 0 : c2);
          int to_o = (v1 == t ? c1 : 0) + (v2 == t ? c2 : 0);
          if (to_o > cap) to_o = cap + 1;
          int val, flip;
          if (to_t == 0) { val = t; flip = to_o; }
          else { val = 1 - t; flip = std::min(to_t, cap + 1); }
          out.prob[val][static_cast<std::size_t>(flip - 1)] += q1 * q2;
        }
      }
    }
  }

  // exact mass is 1; renormalize so rounding error cannot compound
  const double total = out.total_mass();
  for (int v = 0; v < 2; ++v)
    for (double& m : out.prob[v]) m /= total;
  return out;
}

std::vector<ExactRow> exact_table(int depth, double p, int cap) {
  check_p(p);
  check_cap(cap);
  if (depth < 0 || depth > kMaxExactDepth)
    throw std::invalid_argument("depth must be in [0, 64]");

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<ExactRow> rows;
  rows.reserve(static_cast<std::size_t>(depth) + 1);

  CappedCostDistribution dist = leaf_distribution(p, cap);
  for (int n = 0; n <= depth; ++n) {
    if (n > 0) dist = combine(dist, mover_at_height(static_cast<std::uint32_t>(n)));
    ExactRow row;
    row.n = n;
    row.prob_v1 = dist.mass_value(1);
    for (int d = 1; d <= cap; ++d) {
      const double tail1 = dist.tail(1, d);
      const double tail0 = dist.tail(0, d);
      row.F.push_back(1.0 - (tail0 + tail1));
      row.alpha.push_back(row.prob_v1 == 0.0 ? nan : tail1 / row.prob_v1);
      row.beta.push_back(row.prob_v1 == 1.0 ? nan : tail0 / (1.0 - row.prob_v1));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> value_prob_iterate(double p, int depth) {
  check_p(p);
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  std::vector<double> probs;
  probs.reserve(static_cast<std::size_t>(depth) + 1);
  double q = p;
  probs.push_back(q);
  for (int n = 1; n <= depth; ++n) {
    q = (n & 1) ? q * q : 1.0 - (1.0 - q) * (1.0 - q);
    probs.push_back(q);
  }
  return probs;
}

}  // namespace gg
