#include "goldgames/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "goldgames/distribution.hpp"
#include "goldgames/fragility.hpp"
#include "goldgames/game.hpp"

namespace gg {

Interval wilson_interval(std::uint64_t successes, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty sample");
  const double z = 1.959964;
  const double z2 = z * z;
  const double x = static_cast<double>(successes);
  const double nn = static_cast<double>(n);
  const double denom = nn + z2;
  const double center = (x + z2 / 2.0) / denom;
  const double half = z * std::sqrt(x * (nn - x) / nn + z2 / 4.0) / denom;
  return {x / nn, center - half, center + half};
}

EstimationResult estimate(const EstimationRequest& req) {
  if (req.samples == 0) throw std::invalid_argument("samples must be positive");
  if (req.depth > kMaxMaterializedDepth)
    throw std::invalid_argument("depth exceeds materialization limit");
  if (req.dmax < 1 || req.dmax > kMaxCap)
    throw std::invalid_argument("dmax must be in [1, 16]");
  const unsigned workers = std::max(1u, req.workers);

  const std::size_t slots = static_cast<std::size_t>(req.dmax) + 1;
  auto tally_range = [&](std::uint64_t begin, std::uint64_t end,
                         std::vector<std::uint64_t>& counts) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const SampleSpec spec{req.depth, req.p, req.seed, k};
      const GameInstance game = sample_game(spec);
      const CostPair c = cost_pair(game);
      const int v = c.to_one == 0 ? 1 : 0;
      const std::uint64_t frag = std::max(c.to_zero, c.to_one);
      const std::uint64_t capped =
          std::min<std::uint64_t>(frag, static_cast<std::uint64_t>(req.dmax) + 1);
      ++counts[static_cast<std::size_t>(v) * slots + (capped - 1)];
    }
  };

  std::vector<std::vector<std::uint64_t>> partials(
      workers, std::vector<std::uint64_t>(2 * slots, 0));
  if (workers == 1) {
    tally_range(0, req.samples, partials[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (req.samples + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(req.samples, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(req.samples, begin + chunk);
      pool.emplace_back(tally_range, begin, end, std::ref(partials[w]));
    }
    for (auto& t : pool) t.join();
  }

  EstimationResult result;
  result.samples = req.samples;
  result.dmax = req.dmax;
  result.counts.assign(2 * slots, 0);
  for (const auto& part : partials)
    for (std::size_t i = 0; i < part.size(); ++i) result.counts[i] += part[i];

  std::uint64_t ones = 0;
  for (std::size_t j = 0; j < slots; ++j) ones += result.counts[slots + j];
  result.prob_v1 = wilson_interval(ones, req.samples);

  for (int d = 1; d <= req.dmax; ++d) {
    std::uint64_t fragile = 0;
    for (int c = 1; c <= d; ++c)
      fragile += result.count(0, c) + result.count(1, c);
    result.F.push_back(wilson_interval(fragile, req.samples));
  }
  return result;
}

}  // namespace gg
