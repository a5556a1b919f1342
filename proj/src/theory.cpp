#include "goldgames/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "goldgames/game.hpp"

namespace gg {

namespace {

// H from the previous-budget non-fragility values x[r] (x[r] plays the role
// of xi_r^2 asymptotically, alpha_{2n-1}(r) at finite depth):
//   H(1) = 1
//   H(d) = 2*x[d-1] + sum_{r+s=d-1} x[r]x[s] - sum_{r+s=d} x[r]x[s]
// which is the inclusion-exclusion 1 - C(d) + C(d-1) with the near-equal
// O(d) terms cancelled symbolically. Clamped at 0 against underflow.
double h_factor(int d, const std::vector<double>& x) {
  if (d == 1) return 1.0;
  double sum_d = 0.0, sum_dm1 = 0.0;
  for (int r = 1; r <= d - 1; ++r) sum_d += x[r] * x[d - r];
  for (int r = 1; r <= d - 2; ++r) sum_dm1 += x[r] * x[d - 1 - r];
  return std::max(0.0, 2.0 * x[d - 1] + sum_dm1 - sum_d);
}

void check_dmax(int dmax) {
  if (dmax < 1) throw std::invalid_argument("dmax must be >= 1");
}

}  // namespace

double xi_quadratic_root(double Hd) {
  if (!(Hd > 0.0 && Hd <= 1.0))
    throw std::invalid_argument("H(d) must lie in (0, 1]");
  const double f = phi();
  const double f3 = f * f * f;
  const double f5 = f3 * f * f;
  return 2.0 * f3 * Hd / (1.0 + std::sqrt(1.0 - 8.0 * f5 * Hd));
}

std::vector<TheoryRow> xi_sequence(int dmax) {
  check_dmax(dmax);
  const double f = phi();
  const double f2 = f * f;
  std::vector<TheoryRow> rows;
  rows.reserve(static_cast<std::size_t>(dmax));
  std::vector<double> x(static_cast<std::size_t>(dmax) + 1, 0.0);  // x[r] = xi_r^2
  for (int d = 1; d <= dmax; ++d) {
    TheoryRow row;
    row.d = d;
    row.H = h_factor(d, x);
    row.xi = row.H > 0.0 ? xi_quadratic_root(row.H) : 0.0;
    row.xi_sq = row.xi * row.xi;
    row.complement = f * row.xi + f2 * row.xi_sq;
    row.F = 1.0 - row.complement;
    x[static_cast<std::size_t>(d)] = row.xi_sq;
    rows.push_back(row);
  }
  return rows;
}

std::vector<FiniteRow> finite_alpha_beta(int dmax, int nmax) {
  check_dmax(dmax);
  if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
  const double f = phi();
  const double f2 = f * f;
  const double f3 = f2 * f;

  // index 0 unused so x[r] matches budget r
  std::vector<double> alpha(static_cast<std::size_t>(dmax) + 1, 0.0);
  std::vector<double> beta(static_cast<std::size_t>(dmax) + 1, 0.0);

  std::vector<FiniteRow> rows;
  rows.reserve(static_cast<std::size_t>(nmax + 1) * static_cast<std::size_t>(dmax));
  auto emit = [&](int n) {
    for (int d = 1; d <= dmax; ++d)
      rows.push_back({n, d, alpha[static_cast<std::size_t>(d)],
                      beta[static_cast<std::size_t>(d)]});
  };
  emit(0);

  for (int n = 1; n <= nmax; ++n) {
    std::vector<double> na(alpha.size()), nb(beta.size());
    if (n & 1) {
      // odd depth: alpha squares, beta takes the fixed-point step
      for (int d = 1; d <= dmax; ++d) {
        const auto k = static_cast<std::size_t>(d);
        na[k] = alpha[k] * alpha[k];
        nb[k] = f3 * h_factor(d, beta) + 2.0 * f2 * beta[k];
      }
    } else {
      for (int d = 1; d <= dmax; ++d) {
        const auto k = static_cast<std::size_t>(d);
        nb[k] = beta[k] * beta[k];
        na[k] = f3 * h_factor(d, alpha) + 2.0 * f2 * alpha[k];
      }
    }
    alpha.swap(na);
    beta.swap(nb);
    emit(n);
  }
  return rows;
}

LimitCheckReport asymptotic_limit_check(int dmax, int n_big) {
  check_dmax(dmax);
  if (n_big < 40 || (n_big & 1))
    throw std::invalid_argument("n_big must be even and >= 40");

  const auto finite = finite_alpha_beta(dmax, n_big + 1);
  const auto theory = xi_sequence(dmax);
  auto at = [&](int n, int d) -> const FiniteRow& {
    return finite[static_cast<std::size_t>(n) * dmax + (d - 1)];
  };

  LimitCheckReport report;
  report.n_big = n_big;
  for (int d = 1; d <= dmax; ++d) {
    const double xi = theory[static_cast<std::size_t>(d - 1)].xi;
    report.rows.push_back({d, std::fabs(at(n_big, d).alpha - xi),
                           std::fabs(at(n_big + 1, d).beta - xi)});
  }
  report.xi_strictly_decreasing = true;
  report.complement_strictly_decreasing = true;
  for (int d = 2; d <= dmax; ++d) {
    const auto& prev = theory[static_cast<std::size_t>(d - 2)];
    const auto& cur = theory[static_cast<std::size_t>(d - 1)];
    if (!(cur.xi < prev.xi)) report.xi_strictly_decreasing = false;
    if (!(cur.complement < prev.complement))
      report.complement_strictly_decreasing = false;
  }
  return report;
}

}  // namespace gg
