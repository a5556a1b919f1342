#ifndef GOLDGAMES_THEORY_HPP
#define GOLDGAMES_THEORY_HPP

#include <vector>

namespace gg {

// One row of the asymptotic d-fragility recursion.
struct TheoryRow {
  int d = 0;
  double xi = 0.0;
  double xi_sq = 0.0;
  double H = 0.0;
  double F = 0.0;           // 1 - phi*xi - phi^2*xi^2
  double complement = 0.0;  // phi*xi + phi^2*xi^2, formed without cancellation
};

struct FiniteRow {
  int n = 0;
  int d = 0;
  double alpha = 0.0;  // Pr[not d-fragile | V_n = 1]
  double beta = 0.0;   // Pr[not d-fragile | V_n = 0]
};

// Smaller root of 2*phi^2*x^2 - x + phi^3*Hd, in the cancellation-free form
// 2*phi^3*Hd / (1 + sqrt(1 - 8*phi^5*Hd)). Throws for Hd outside (0, 1].
double xi_quadratic_root(double Hd);

// xi_d, H(d), F(d) for d = 1..dmax. H(1) = 1; for d > 1,
//   H(d) = 2*xi_{d-1}^2 + sum_{r+s=d-1} xi_r^2 xi_s^2 - sum_{r+s=d} xi_r^2 xi_s^2
// (sums over r,s >= 1, empty sums are 0), which avoids the subtraction of
// near-equal O(d) terms in the inclusion-exclusion form.
std::vector<TheoryRow> xi_sequence(int dmax);

// Finite-depth alpha/beta recursion, all budgets d = 1..dmax jointly:
//   alpha_0 = beta_0 = 0
//   alpha_{2n-1}(d) = alpha_{2n-2}(d)^2
//   alpha_{2n}(d)   = phi^3*H(d) + 2*phi^2*alpha_{2n-1}(d)
// with H built from alpha_{2n-1}(r) exactly as in xi_sequence; beta is the
// same with parities exchanged. Rows ordered by n, then d.
std::vector<FiniteRow> finite_alpha_beta(int dmax, int nmax);

struct LimitCheckRow {
  int d = 0;
  double dev_alpha = 0.0;  // |alpha_{n_big}(d) - xi_d|
  double dev_beta = 0.0;   // |beta_{n_big+1}(d) - xi_d|
};

struct LimitCheckReport {
  int n_big = 0;
  std::vector<LimitCheckRow> rows;
  bool xi_strictly_decreasing = false;
  bool complement_strictly_decreasing = false;
};

// Convergence of the finite recursion to the fixed point. n_big must be
// even and >= 40.
LimitCheckReport asymptotic_limit_check(int dmax, int n_big);

}  // namespace gg

#endif
