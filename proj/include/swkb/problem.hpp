#pragma once

// The angular eigenproblem
//
//   T'' + cot(theta) T' + (lambda^2 - m^2 / sin^2(theta)) T = 0,  0 < theta < pi,
//
// its Schroedinger form F = T sqrt(sin theta),  -F'' + V F = (lambda^2 + 1/4) F,
// and the supersymmetric factorization built on the ground state
// T0 = sin^m(theta) with superpotential Phi = -(m + 1/2) cot(theta).

#include <cmath>
#include <numbers>
#include <string>

#include "swkb/errors.hpp"

namespace swkb {

inline constexpr double pi = std::numbers::pi;

namespace detail {

inline void require_interior(double theta) {
  if (!(theta > 0.0 && theta < pi)) {
    throw swkb::domain_error("theta must lie in the open interval (0, pi), got " +
                             std::to_string(theta));
  }
}

inline void require_nonnegative(int m, const char* name) {
  if (m < 0) throw swkb::domain_error(std::string(name) + " must be nonnegative");
}

}  // namespace detail

/// Quantum numbers of one eigenstate; l = n_theta + m.
class AngularProblem {
 public:
  AngularProblem(int m, int n_theta) : m_(m), n_theta_(n_theta) {
    detail::require_nonnegative(m, "m");
    detail::require_nonnegative(n_theta, "n_theta");
  }

  int m() const noexcept { return m_; }
  int n_theta() const noexcept { return n_theta_; }
  int l() const noexcept { return n_theta_ + m_; }

 private:
  int m_;
  int n_theta_;
};

/// Phi(theta) = -c cot(theta) with c = m + 1/2.
class SuperpotentialModel {
 public:
  explicit SuperpotentialModel(int m) : c_(m + 0.5) { detail::require_nonnegative(m, "m"); }

  double c() const noexcept { return c_; }

  double phi(double theta) const {
    detail::require_interior(theta);
    return -c_ / std::tan(theta);
  }

  // analytic derivative, c / sin^2
  double phi_prime(double theta) const {
    detail::require_interior(theta);
    const double s = std::sin(theta);
    return c_ / (s * s);
  }

  double phi_squared(double theta) const {
    const double p = phi(theta);
    return p * p;
  }

 private:
  double c_;
};

enum class PartnerSign { plus, minus };

/// Lowest state at fixed m: T0 = sin^m, F0 = sin^(m+1/2), lambda0^2 = m(m+1).
class GroundState {
 public:
  explicit GroundState(int m) : m_(m) { detail::require_nonnegative(m, "m"); }

  int m() const noexcept { return m_; }
  double lambda0_squared() const noexcept { return double(m_) * double(m_ + 1); }

  double t0(double theta) const {
    detail::require_interior(theta);
    return std::pow(std::sin(theta), m_);
  }

  double f0(double theta) const {
    detail::require_interior(theta);
    return std::pow(std::sin(theta), m_ + 0.5);
  }

 private:
  int m_;
};

/// Centrifugal term m^2 / sin^2(theta) of the angular equation.
inline double eval_effective_potential(int m, double theta) {
  detail::require_nonnegative(m, "m");
  detail::require_interior(theta);
  if (m == 0) return 0.0;
  const double s = std::sin(theta);
  return double(m) * double(m) / (s * s);
}

/// V(theta) = (m^2 - 1/4) / sin^2(theta), so that -F'' + V F = (lambda^2 + 1/4) F.
inline double eval_standard_potential(int m, double theta) {
  detail::require_nonnegative(m, "m");
  detail::require_interior(theta);
  const double s = std::sin(theta);
  return (double(m) * double(m) - 0.25) / (s * s);
}

/// T -> F = T sqrt(sin theta).
inline double standard_transform(double t_value, double theta) {
  detail::require_interior(theta);
  return t_value * std::sqrt(std::sin(theta));
}

/// F -> T = F / sqrt(sin theta).
inline double inverse_standard_transform(double f_value, double theta) {
  detail::require_interior(theta);
  const double root = std::sqrt(std::sin(theta));
  if (root == 0.0) throw swkb::domain_error("sin(theta) underflows to zero");
  return f_value / root;
}

inline double eval_superpotential(int m, double theta) {
  return SuperpotentialModel(m).phi(theta);
}

/// V_pm = Phi^2 pm Phi' = c^2 cot^2 pm c / sin^2.
inline double eval_partner_potential(PartnerSign sign, int m, double theta) {
  detail::require_nonnegative(m, "m");
  detail::require_interior(theta);
  const double c = m + 0.5;
  const double s = std::sin(theta);
  const double cot = std::cos(theta) / s;
  const double dphi = c / (s * s);
  // c^2 is exact; a single rounding keeps near-pole sums (~1/theta^2) to half an ulp
  return std::fma(c * c, cot * cot, sign == PartnerSign::plus ? dphi : -dphi);
}

/// V_-(m, theta) - V_+(m - 1, theta) + 2m; identically zero.
inline double shape_invariance_residual(int m, double theta) {
  if (m < 1) throw swkb::domain_error("shape invariance needs m >= 1 (partner parameter m - 1)");
  return eval_partner_potential(PartnerSign::minus, m, theta) -
         eval_partner_potential(PartnerSign::plus, m - 1, theta) + 2.0 * m;
}

inline GroundState ground_state(int m) { return GroundState(m); }

}  // namespace swkb
