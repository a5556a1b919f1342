#include "goldgames/verify.hpp"

#include <cmath>
#include <sstream>

#include "goldgames/distribution.hpp"
#include "goldgames/fragility.hpp"
#include "goldgames/game.hpp"
#include "goldgames/theory.hpp"

namespace gg {

namespace {

GameInstance game_from_mask(std::uint32_t depth, std::uint64_t mask) {
  GameInstance game(depth);
  for (std::uint64_t i = 0; i < game.leaf_count(); ++i)
    game.set_leaf(i, (mask >> i) & 1);
  return game;
}

}  // namespace

VerifyResult run_verification(std::uint32_t max_depth, std::uint64_t budget) {
  std::ostringstream report;
  bool all_ok = true;
  auto suite = [&](const std::string& name, bool ok, const std::string& detail) {
    report << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) report << "  (" << detail << ")";
    report << '\n';
    if (!ok) all_ok = false;
  };

  // 1. DP fragility against the exhaustive oracle, all games up to depth
  //    min(max_depth, 3); seeded random games at depth 4.
  {
    bool ok = true;
    std::string counterexample;
    for (std::uint32_t n = 0; ok && n <= std::min<std::uint32_t>(max_depth, 3); ++n) {
      const std::uint64_t leaves = std::uint64_t{1} << n;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << leaves); ++mask) {
        const GameInstance game = game_from_mask(n, mask);
        const auto oracle = brute_force_fragility(game, std::min<std::uint64_t>(budget, leaves));
        if (!oracle || *oracle != fragility(game)) {
          ok = false;
          counterexample = "depth " + std::to_string(n) + " mask " + std::to_string(mask);
          break;
        }
      }
    }
    if (ok && max_depth >= 4) {
      for (std::uint64_t k = 0; k < 200; ++k) {
        const GameInstance game = sample_game({4, phi(), 0xC0FFEEull, k});
        const std::uint64_t cap = std::min<std::uint64_t>(budget, 3);
        const auto oracle = brute_force_fragility(game, cap);
        const std::uint64_t dp = fragility(game);
        const bool agree = oracle ? (*oracle == dp) : (dp > cap);
        if (!agree) {
          ok = false;
          counterexample = "depth 4 sample " + std::to_string(k);
          break;
        }
      }
    }
    suite("brute-force fragility equivalence", ok, counterexample);
  }

  // 2. Witness validity: flipping the witness changes the value and its size
  //    equals the fragility.
  {
    bool ok = true;
    std::string counterexample;
    for (std::uint64_t k = 0; ok && k < 500; ++k) {
      GameInstance game = sample_game({std::min<std::uint32_t>(max_depth + 2, 8),
                                       phi(), 0xBADC0DEull, k});
      const FragilityReport rep = witness(game);
      if (rep.witness.size() != rep.fragility) {
        ok = false;
        counterexample = "size mismatch at sample " + std::to_string(k);
        break;
      }
      for (std::uint64_t i : rep.witness) game.flip_leaf(i);
      if (value(game) == rep.value) {
        ok = false;
        counterexample = "flip set does not change value, sample " + std::to_string(k);
      }
    }
    suite("witness validity", ok, counterexample);
  }

  // 3. Closed-form identities at d = 1.
  {
    const auto theory = xi_sequence(1);
    const double dev_xi = std::fabs(theory[0].xi - phi() / 2.0);
    const double dev_f = std::fabs(theory[0].F - 5.0 * phi() / 4.0);
    suite("xi_1 = phi/2 and F(1) = 5*phi/4",
          dev_xi < 1e-15 && dev_f < 1e-15,
          "|dxi|=" + std::to_string(dev_xi) + " |dF|=" + std::to_string(dev_f));
  }

  // 4. Fixed-point residuals for d <= 8.
  {
    const double f = phi();
    bool ok = true;
    double worst = 0.0;
    for (const auto& row : xi_sequence(8)) {
      const double res = std::fabs(2.0 * f * f * row.xi_sq - row.xi +
                                   f * f * f * row.H);
      worst = std::max(worst, res);
      if (res >= 1e-14) ok = false;
    }
    suite("fixed-point residuals d<=8", ok, "max " + std::to_string(worst));
  }

  // 5. Finite alpha/beta recursion against the exact distribution DP,
  //    n <= 40, d <= 5, at p = phi.
  {
    const int dmax = 5, nmax = 40;
    const auto finite = finite_alpha_beta(dmax, nmax);
    const auto exact = exact_table(nmax, phi(), dmax);
    double worst = 0.0;
    int worst_n = 0, worst_d = 0;
    for (const auto& row : finite) {
      const auto& ex = exact[static_cast<std::size_t>(row.n)];
      const double da = std::fabs(row.alpha - ex.alpha[static_cast<std::size_t>(row.d - 1)]);
      const double db = std::fabs(row.beta - ex.beta[static_cast<std::size_t>(row.d - 1)]);
      if (std::max(da, db) > worst) {
        worst = std::max(da, db);
        worst_n = row.n;
        worst_d = row.d;
      }
    }
    suite("alpha/beta recursion vs exact DP (n<=40, d<=5)", worst < 1e-8,
          "max dev " + std::to_string(worst) + " at n=" + std::to_string(worst_n) +
              " d=" + std::to_string(worst_d));
  }

  return {all_ok, report.str()};
}

}  // namespace gg
