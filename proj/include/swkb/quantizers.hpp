#pragma once

// Quantization of the angular problem:
//   WKB   int_a^b sqrt(lambda^2 - m^2/sin^2) = pi (n_theta + 1/2)  ->  lambda = l + 1/2
//   SWKB  int_a^b sqrt(E_- - Phi^2)          = pi n_theta          ->  lambda^2 = l (l + 1)
// with E_- = lambda^2 - m(m+1) linking the partner spectrum to lambda^2.

#include <optional>
#include <string_view>

#include "swkb/errors.hpp"
#include "swkb/problem.hpp"
#include "swkb/quadrature.hpp"
#include "swkb/root_finding.hpp"

namespace swkb {

enum class QuantizationMethod {
  wkb_numerical,
  wkb_closed,
  swkb_numerical,
  swkb_closed,
  exact_reference,
  langer_reference,
};

constexpr std::string_view to_string(QuantizationMethod method) {
  switch (method) {
    case QuantizationMethod::wkb_numerical: return "wkb_numerical";
    case QuantizationMethod::wkb_closed: return "wkb_closed";
    case QuantizationMethod::swkb_numerical: return "swkb_numerical";
    case QuantizationMethod::swkb_closed: return "swkb_closed";
    case QuantizationMethod::exact_reference: return "exact_reference";
    case QuantizationMethod::langer_reference: return "langer_reference";
  }
  return "unknown";
}

enum class SwkbMode { numerical, closed };
enum class WkbMode { numerical, closed };

struct QuantizationResult {
  QuantizationMethod method = QuantizationMethod::exact_reference;
  int m = 0;
  int n_theta = 0;
  int l = 0;
  double lambda_squared = 0.0;
  std::optional<double> e_minus;  ///< SWKB only
  double residual = 0.0;          ///< |action - target| at the returned root
  int iterations = 0;
};

struct QuantizerOptions {
  double action_tol = 1e-10;
  int max_iterations = 200;
  int n_nodes = default_quadrature_nodes;
};

inline double exact_lambda_squared(int l) {
  detail::require_nonnegative(l, "l");
  return double(l) * double(l + 1);
}

inline double langer_lambda_squared(int l) {
  detail::require_nonnegative(l, "l");
  const double x = l + 0.5;
  return x * x;
}

/// lambda^2 = E_- + lambda0^2 with lambda0^2 = m(m + 1).
inline double map_eminus_to_lambda2(double e_minus, int m) {
  detail::require_nonnegative(m, "m");
  if (!(e_minus >= 0.0)) throw swkb::domain_error("E_- must be nonnegative");
  return e_minus + GroundState(m).lambda0_squared();
}

/// SWKB quantization. The numerical mode never touches the closed form: it
/// root-finds E_- on the quadrature action alone.
inline QuantizationResult quantize_swkb(int n_theta, int m, SwkbMode mode = SwkbMode::numerical,
                                        const QuantizerOptions& opts = {}) {
  const AngularProblem problem(m, n_theta);
  QuantizationResult out;
  out.m = m;
  out.n_theta = n_theta;
  out.l = problem.l();

  if (mode == SwkbMode::closed) {
    const double c = m + 0.5;
    out.method = QuantizationMethod::swkb_closed;
    // (n + c)^2 - c^2, factored
    out.e_minus = n_theta * (n_theta + 2.0 * c);
    out.lambda_squared = map_eminus_to_lambda2(*out.e_minus, m);
    return out;
  }

  out.method = QuantizationMethod::swkb_numerical;
  if (n_theta == 0) {
    // zero action only at E_- = 0, the bracket edge
    out.e_minus = 0.0;
    out.lambda_squared = map_eminus_to_lambda2(0.0, m);
    return out;
  }

  const double target = n_theta * pi;
  auto mismatch = [&](double energy) { return action_swkb(energy, m, opts.n_nodes).value - target; };
  const double upper = double(n_theta + m + 1) * double(n_theta + m + 1);
  const RootResult root = find_increasing_root(
      mismatch, 0.0, -target, upper, RootOptions{opts.action_tol, opts.max_iterations});

  out.e_minus = root.x;
  out.lambda_squared = map_eminus_to_lambda2(root.x, m);
  out.residual = root.residual;
  out.iterations = root.iterations;
  return out;
}

/// Leading-order WKB with the Maslov 1/2 on the quantization side.
inline QuantizationResult quantize_wkb(int n_theta, int m, WkbMode mode = WkbMode::numerical,
                                       const QuantizerOptions& opts = {}) {
  const AngularProblem problem(m, n_theta);
  QuantizationResult out;
  out.m = m;
  out.n_theta = n_theta;
  out.l = problem.l();

  if (mode == WkbMode::closed) {
    const double lambda = problem.l() + 0.5;
    out.method = QuantizationMethod::wkb_closed;
    out.lambda_squared = lambda * lambda;
    return out;
  }

  out.method = QuantizationMethod::wkb_numerical;
  const double target = (n_theta + 0.5) * pi;
  auto mismatch = [&](double lambda) {
    if (m > 0 && !(lambda > m * (1.0 + 1e-10))) return -target;
    return action_wkb(lambda, m, opts.n_nodes).value - target;
  };
  // the action vanishes as lambda -> m from above (m >= 1) or lambda -> 0 (m = 0)
  const double lower = m;
  const double upper = m + n_theta + 1.0;
  const RootResult root = find_increasing_root(
      mismatch, lower, -target, upper, RootOptions{opts.action_tol, opts.max_iterations});

  out.lambda_squared = root.x * root.x;
  out.residual = root.residual;
  out.iterations = root.iterations;
  return out;
}

}  // namespace swkb
