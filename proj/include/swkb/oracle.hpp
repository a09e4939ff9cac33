#pragma once

// Direct numerical eigenvalues of the angular equation and of the partner
// Hamiltonians, independent of any semiclassical input.
//
// angular_T_form: -(1/sin) d/dtheta (sin dT/dtheta) + m^2/sin^2 T = lambda^2 T,
//   finite volumes on n_grid uniform cells over (0, pi). Face fluxes carry
//   sin(theta_face), which is zero at both poles, so no truncation or boundary
//   condition is needed. The generalized problem K T = lambda^2 W T is made
//   symmetric by the scaling W^{-1/2} K W^{-1/2}.
// partner_minus / partner_plus: -F'' + V_pm F on [eps, pi - eps], Dirichlet,
//   three-point central differences on n_grid interior nodes.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>
#include <vector>

#include "swkb/errors.hpp"
#include "swkb/problem.hpp"
#include "swkb/quantizers.hpp"
#include "swkb/tridiagonal.hpp"

namespace swkb {

enum class OperatorKind { angular_T_form, partner_minus, partner_plus };

constexpr std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::angular_T_form: return "angular_T_form";
    case OperatorKind::partner_minus: return "partner_minus";
    case OperatorKind::partner_plus: return "partner_plus";
  }
  return "unknown";
}

inline constexpr int default_oracle_grid = 4000;
inline constexpr double default_partner_epsilon = 1e-3;
inline constexpr int min_oracle_grid = 50;

struct DiscretizedProblem {
  OperatorKind kind = OperatorKind::angular_T_form;
  int m = 0;
  int n_grid = 0;
  double epsilon = default_partner_epsilon;
  SymmetricTridiagonal matrix;
};

struct SpectrumEstimate {
  std::vector<double> eigenvalues;  ///< ascending
  OperatorKind kind = OperatorKind::angular_T_form;
  int m = 0;
  int n_grid = 0;
  double epsilon = 0.0;
  std::vector<double> grid_errors;  ///< |value(n_grid) - value(n_grid / 2)| per eigenvalue
  double grid_error_estimate = 0.0;  ///< max of grid_errors
};

namespace detail {

inline SymmetricTridiagonal assemble_angular(int m, int n) {
  const double h = pi / n;
  const double m2 = double(m) * double(m);

  std::vector<double> face(n + 1);
  for (int i = 1; i < n; ++i) face[i] = std::sin(i * h);
  face[0] = 0.0;
  face[n] = 0.0;

  std::vector<double> weight(n);  // sin(theta_i) h
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    const double s = std::sin((i + 0.5) * h);
    weight[i] = s * h;
    d[i] = (face[i] + face[i + 1]) / (h * h * s) + m2 / (s * s);
  }
  std::vector<double> e(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    e[i] = -(face[i + 1] / h) / std::sqrt(weight[i] * weight[i + 1]);
  }
  return {std::move(d), std::move(e)};
}

inline SymmetricTridiagonal assemble_partner(PartnerSign sign, int m, int n, double eps) {
  const double h = (pi - 2.0 * eps) / (n + 1);
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = 2.0 * inv_h2 + eval_partner_potential(sign, m, eps + (i + 1) * h);
  }
  return {std::move(d), std::vector<double>(n - 1, -inv_h2)};
}

inline SymmetricTridiagonal assemble(OperatorKind kind, int m, int n, double eps) {
  switch (kind) {
    case OperatorKind::angular_T_form: return assemble_angular(m, n);
    case OperatorKind::partner_minus: return assemble_partner(PartnerSign::minus, m, n, eps);
    case OperatorKind::partner_plus: return assemble_partner(PartnerSign::plus, m, n, eps);
  }
  throw swkb::domain_error("unknown operator kind");
}

}  // namespace detail

inline DiscretizedProblem build_discretization(OperatorKind kind, int m, int n_grid,
                                               double epsilon = default_partner_epsilon) {
  detail::require_nonnegative(m, "m");
  if (n_grid < min_oracle_grid) throw swkb::domain_error("n_grid must be >= 50");
  if (kind != OperatorKind::angular_T_form && !(epsilon > 0.0 && epsilon < 0.1)) {
    throw swkb::domain_error("partner forms need 0 < epsilon < 0.1");
  }
  return {kind, m, n_grid, epsilon, detail::assemble(kind, m, n_grid, epsilon)};
}

/// k lowest eigenvalues of the discretized operator, with a half-grid error estimate.
inline SpectrumEstimate solve_spectrum(const DiscretizedProblem& problem, int k) {
  if (k < 1 || k > problem.n_grid) throw swkb::domain_error("solve_spectrum: need 1 <= k <= n_grid");

  SpectrumEstimate out;
  out.kind = problem.kind;
  out.m = problem.m;
  out.n_grid = problem.n_grid;
  out.epsilon = problem.epsilon;
  out.eigenvalues = problem.matrix.lowest_eigenvalues(std::size_t(k));

  const int coarse_n = problem.n_grid / 2;
  const int coarse_k = std::min(k, coarse_n);
  std::vector<double> coarse;
  if (coarse_n >= 2) {
    coarse = detail::assemble(problem.kind, problem.m, coarse_n, problem.epsilon)
                 .lowest_eigenvalues(std::size_t(coarse_k));
  }
  out.grid_errors.resize(std::size_t(k), std::numeric_limits<double>::infinity());
  for (std::size_t j = 0; j < coarse.size(); ++j) {
    out.grid_errors[j] = std::abs(out.eigenvalues[j] - coarse[j]);
  }
  out.grid_error_estimate = *std::max_element(out.grid_errors.begin(), out.grid_errors.end());
  return out;
}

inline constexpr double default_residual_step = 1e-3;

/// max over n_samples uniform points of [0.1, pi - 0.1] of
/// |T'' + cot T' + (lambda^2 - m^2/sin^2) T|, derivatives by 4th-order central
/// differences.
template <class TFunc>
double ode_residual(int m, double lambda_squared, TFunc&& t, int n_samples,
                    double step = default_residual_step) {
  detail::require_nonnegative(m, "m");
  if (n_samples < 10) throw swkb::domain_error("ode_residual: need n_samples >= 10");
  const double lo = 0.1;
  const double hi = pi - 0.1;
  const double m2 = double(m) * double(m);

  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double x = lo + (hi - lo) * i / (n_samples - 1);
    const double tm2 = t(x - 2 * step), tm1 = t(x - step), t0 = t(x), tp1 = t(x + step),
                 tp2 = t(x + 2 * step);
    const double d1 = (tm2 - 8.0 * tm1 + 8.0 * tp1 - tp2) / (12.0 * step);
    const double d2 = (-tm2 + 16.0 * tm1 - 30.0 * t0 + 16.0 * tp1 - tp2) / (12.0 * step * step);
    const double s = std::sin(x);
    const double lhs = d2 + std::cos(x) / s * d1 + (lambda_squared - m2 / (s * s)) * t0;
    worst = std::max(worst, std::abs(lhs));
  }
  return worst;
}

struct SusyTolerances {
  double ground = 1e-3;   // |E_-^0|
  double partner = 5e-3;  // excited H_- vs H_+
  double shift = 5e-3;    // E_- + m(m+1) vs l(l+1)
};

struct SusyCheck {
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass() const noexcept { return measured <= tolerance; }
};

struct SusyReport {
  int m = 0;
  int n_grid = 0;
  int k = 0;
  std::vector<double> minus_eigenvalues;
  std::vector<double> plus_eigenvalues;
  SusyCheck ground_state_vanishes;
  SusyCheck partner_spectra_coincide;
  SusyCheck spectral_shift;

  bool pass() const noexcept {
    return ground_state_vanishes.pass() && partner_spectra_coincide.pass() && spectral_shift.pass();
  }
};

/// Numerical check of the three SUSY statements for the cot superpotential:
/// H_- has a zero ground energy, its excited levels coincide with the levels
/// of H_+, and E_- + m(m+1) reproduces l(l+1).
inline SusyReport susy_checks(int m, int n_grid, int k, const SusyTolerances& tol = {},
                              double epsilon = default_partner_epsilon) {
  if (m < 1) throw swkb::domain_error("susy_checks: need m >= 1");
  if (k < 2) throw swkb::domain_error("susy_checks: need k >= 2");

  const auto minus =
      build_discretization(OperatorKind::partner_minus, m, n_grid, epsilon).matrix.lowest_eigenvalues(k);
  const auto plus =
      build_discretization(OperatorKind::partner_plus, m, n_grid, epsilon).matrix.lowest_eigenvalues(k - 1);

  SusyReport report;
  report.m = m;
  report.n_grid = n_grid;
  report.k = k;
  report.ground_state_vanishes = {std::abs(minus[0]), tol.ground};

  double gap = 0.0;
  for (int j = 1; j < k; ++j) gap = std::max(gap, std::abs(minus[j] - plus[j - 1]));
  report.partner_spectra_coincide = {gap, tol.partner};

  // discrete E_-^0 may sit a hair below zero, so shift by lambda0^2 directly
  const double lambda0_squared = GroundState(m).lambda0_squared();
  double shift = 0.0;
  for (int j = 0; j < k; ++j) {
    shift = std::max(shift, std::abs(minus[j] + lambda0_squared - exact_lambda_squared(m + j)));
  }
  report.spectral_shift = {shift, tol.shift};

  report.minus_eigenvalues = minus;
  report.plus_eigenvalues = plus;
  return report;
}

}  // namespace swkb
