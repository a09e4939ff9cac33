#pragma once

// Action integrals of the form  int_a^b sqrt(g(theta)) dtheta  where g vanishes
// at both ends of the classical region, plus the turning points and closed
// forms for the two problem families used here.

#include <algorithm>
#include <cmath>
#include <string>

#include "swkb/errors.hpp"
#include "swkb/gauss_legendre.hpp"
#include "swkb/problem.hpp"

namespace swkb {

inline constexpr int default_quadrature_nodes = 128;

/// Classical region [a, b]; for both families here a + b = pi.
struct TurningPoints {
  double a;
  double b;

  double width() const noexcept { return b - a; }
};

enum class ActionMethod { numerical, closed_form };

struct ActionValue {
  double value = 0.0;
  ActionMethod method = ActionMethod::numerical;
  double est_error = 0.0;
};

/// Roots of E - Phi^2(theta) = 0: a = arctan((m + 1/2) / sqrt(E)), b = pi - a.
inline TurningPoints turning_points_swkb(double energy, int m) {
  detail::require_nonnegative(m, "m");
  if (!(energy > 0.0)) throw swkb::domain_error("no classical region for E <= 0");
  const double a = std::atan((m + 0.5) / std::sqrt(energy));
  return {a, pi - a};
}

/// Zeros of lambda^2 - m^2 / sin^2(theta): a = arcsin(m / lambda), b = pi - a.
inline TurningPoints turning_points_wkb(double lambda, int m) {
  if (m < 1) {
    throw swkb::domain_error("m = 0 has no interior turning points; integrate over (0, pi)");
  }
  // lambda within a relative 1e-10 of m leaves no resolvable classical region
  if (!(lambda > m * (1.0 + 1e-10))) {
    throw swkb::domain_error("empty classical region: need lambda > m");
  }
  const double a = std::asin(m / lambda);
  return {a, pi - a};
}

namespace detail {

// One Gauss-Legendre pass after theta = mid + half * sin(u), u in [-pi/2, pi/2].
// The cos(u) Jacobian cancels the square-root cusp of sqrt(g) at both ends.
template <class G>
double sine_mapped_pass(G& g, double a, double b, const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double u_half = 0.5 * pi;

  double g_max = 0.0;
  std::vector<double> samples(rule.size());
  std::vector<double> jacobian(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double u = u_half * rule.nodes[i];
    samples[i] = g(mid + half * std::sin(u));
    jacobian[i] = half * std::cos(u);
    g_max = std::max(g_max, std::abs(samples[i]));
  }

  const double negative_allowance = 1e-12 * (1.0 + g_max);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double value = samples[i];
    if (!(value >= 0.0)) {
      if (!(value >= -negative_allowance)) {
        throw swkb::numerical_error("integrand radicand negative inside [a, b] (value " +
                                    std::to_string(value) + "); wrong bracket?");
      }
      value = 0.0;
    }
    sum += rule.weights[i] * std::sqrt(value) * jacobian[i];
  }
  return u_half * sum;
}

}  // namespace detail

/// int_a^b sqrt(g) with the sine substitution; the reported value is the
/// 2 * n_nodes pass and est_error its difference from the n_nodes pass.
template <class G>
ActionValue integrate_sqrt_well(G&& g, double a, double b,
                                int n_nodes = default_quadrature_nodes) {
  if (!(a < b)) throw swkb::domain_error("integrate_sqrt_well: need a < b");
  if (n_nodes < 8) throw swkb::domain_error("integrate_sqrt_well: need n_nodes >= 8");

  const double coarse = detail::sine_mapped_pass(g, a, b, gauss_legendre(n_nodes));
  const double fine = detail::sine_mapped_pass(g, a, b, gauss_legendre(2 * n_nodes));
  return {fine, ActionMethod::numerical, std::abs(fine - coarse)};
}

/// int_a^b sqrt(E - Phi^2) over the SWKB classical region.
inline ActionValue action_swkb(double energy, int m, int n_nodes = default_quadrature_nodes) {
  detail::require_nonnegative(m, "m");
  if (!(energy >= 0.0)) throw swkb::domain_error("action_swkb: need E >= 0");
  if (energy == 0.0) return {0.0, ActionMethod::numerical, 0.0};

  const auto [a, b] = turning_points_swkb(energy, m);
  const double c2 = (m + 0.5) * (m + 0.5);
  auto radicand = [energy, c2](double theta) {
    const double cot = std::cos(theta) / std::sin(theta);
    return energy - c2 * cot * cot;
  };
  return integrate_sqrt_well(radicand, a, b, n_nodes);
}

/// pi [sqrt(E + (m + 1/2)^2) - (m + 1/2)].
inline ActionValue action_swkb_closed(double energy, int m) {
  detail::require_nonnegative(m, "m");
  if (!(energy >= 0.0)) throw swkb::domain_error("action_swkb_closed: need E >= 0");
  const double c = m + 0.5;
  // rationalized form avoids cancellation for small E
  const double value = pi * energy / (std::sqrt(energy + c * c) + c);
  return {value, ActionMethod::closed_form, 0.0};
}

/// Real-axis half of the leading-order WKB loop integral,
/// int_a^b sqrt(lambda^2 - m^2 / sin^2). For m = 0 the integral spans (0, pi).
inline ActionValue action_wkb(double lambda, int m, int n_nodes = default_quadrature_nodes) {
  detail::require_nonnegative(m, "m");
  const double lambda2 = lambda * lambda;
  if (m == 0) {
    if (!(lambda > 0.0)) throw swkb::domain_error("action_wkb: need lambda > 0");
    return integrate_sqrt_well([lambda2](double) { return lambda2; }, 0.0, pi, n_nodes);
  }

  const auto [a, b] = turning_points_wkb(lambda, m);
  const double m2 = double(m) * double(m);
  auto radicand = [lambda2, m2](double theta) {
    const double s = std::sin(theta);
    return lambda2 - m2 / (s * s);
  };
  return integrate_sqrt_well(radicand, a, b, n_nodes);
}

/// pi (lambda - m), or pi lambda at m = 0.
inline ActionValue action_wkb_closed(double lambda, int m) {
  detail::require_nonnegative(m, "m");
  if (m == 0 ? !(lambda > 0.0) : !(lambda > m)) {
    throw swkb::domain_error("action_wkb_closed: empty classical region");
  }
  return {pi * (lambda - m), ActionMethod::closed_form, 0.0};
}

}  // namespace swkb
