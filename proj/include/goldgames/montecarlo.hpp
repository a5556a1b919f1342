#ifndef GOLDGAMES_MONTECARLO_HPP
#define GOLDGAMES_MONTECARLO_HPP

#include <cstdint>
#include <vector>

namespace gg {

struct EstimationRequest {
  std::uint32_t depth = 0;
  double p = 0.0;
  int dmax = 1;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct Interval {
  double est = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct EstimationResult {
  std::uint64_t samples = 0;
  int dmax = 1;
  // counts[v * (dmax+1) + (c-1)], c = min(fragility, dmax+1) in 1..dmax+1.
  std::vector<std::uint64_t> counts;
  Interval prob_v1;
  std::vector<Interval> F;  // F[d-1], d = 1..dmax

  std::uint64_t count(int v, int capped_frag) const {
    return counts[static_cast<std::size_t>(v) * (dmax + 1) + capped_frag - 1];
  }
};

// 95% Wilson score interval (z = 1.959964).
Interval wilson_interval(std::uint64_t successes, std::uint64_t n);

// Tallies (value, capped fragility) over sample indices 0..samples-1 using
// the counter-based sampler; sample ranges are partitioned across workers
// and merged by integer addition, so the result is bit-identical for any
// worker count.
EstimationResult estimate(const EstimationRequest& req);

}  // namespace gg

#endif
