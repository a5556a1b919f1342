#ifndef GOLDGAMES_VERIFY_HPP
#define GOLDGAMES_VERIFY_HPP

#include <cstdint>
#include <string>

namespace gg {

struct VerifyResult {
  bool passed = false;
  std::string report;  // one line per suite, first counterexample on failure
};

// Bundled cross-oracle suites: exhaustive brute-force fragility equivalence
// up to max_depth (sampled games at depth 4), witness validity, the
// xi_1 = phi/2 and F(1) = 5*phi/4 identities, fixed-point residuals, and
// the finite alpha/beta recursion against the exact distribution DP.
VerifyResult run_verification(std::uint32_t max_depth, std::uint64_t budget);

}  // namespace gg

#endif
