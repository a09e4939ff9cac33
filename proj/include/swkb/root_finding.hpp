#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "swkb/errors.hpp"

namespace swkb {

struct RootOptions {
  double f_tol = 1e-10;  ///< stop when |f(x)| <= f_tol
  int max_iterations = 200;
  int max_expansions = 64;
};

struct RootResult {
  double x = 0.0;
  double residual = 0.0;  ///< |f(x)|
  int iterations = 0;     ///< function evaluations spent inside the bracket
};

/// Root of a continuous increasing f on [lo, hi].
///
/// f(lo) is supplied by the caller (it is often known exactly, e.g. a zero
/// action at the bottom of the well, where direct evaluation is singular).
/// If f(hi) < 0 the bracket width is doubled from lo until it brackets.
/// Iteration is false position with the Illinois modification; whenever
/// three consecutive steps fail to halve the bracket a bisection step is
/// forced.
template <class F>
RootResult find_increasing_root(F&& f, double lo, double f_lo, double hi,
                                const RootOptions& opts = {}) {
  if (!(hi > lo)) throw swkb::domain_error("find_increasing_root: need hi > lo");
  if (f_lo > 0.0) {
    throw swkb::numerical_error("find_increasing_root: f(lo) > 0, root lies below the bracket");
  }
  if (std::abs(f_lo) <= opts.f_tol) return {lo, std::abs(f_lo), 0};

  double f_hi = f(hi);
  const double width0 = hi - lo;
  for (int k = 0; f_hi < 0.0; ++k) {
    if (k == opts.max_expansions) {
      throw swkb::numerical_error("root not bracketed after " + std::to_string(k) +
                                  " expansions (last hi = " + std::to_string(hi) +
                                  ", f(hi) = " + std::to_string(f_hi) + ")");
    }
    lo = hi;
    f_lo = f_hi;
    hi = lo + width0 * std::ldexp(1.0, k + 1);
    f_hi = f(hi);
  }
  if (std::abs(f_hi) <= opts.f_tol) return {hi, std::abs(f_hi), 0};

  double a = lo, fa = f_lo;
  double b = hi, fb = f_hi;
  int last_side = 0;
  double width_checkpoint = b - a;

  for (int it = 1; it <= opts.max_iterations; ++it) {
    double x;
    if (it % 3 == 0 && (b - a) > 0.5 * width_checkpoint) {
      x = 0.5 * (a + b);
    } else {
      x = b - fb * (b - a) / (fb - fa);
      if (!(x > a && x < b)) x = 0.5 * (a + b);
    }
    if (it % 3 == 0) width_checkpoint = b - a;

    const double fx = f(x);
    if (std::abs(fx) <= opts.f_tol) return {x, std::abs(fx), it};

    if (fx < 0.0) {
      a = x;
      fa = fx;
      if (last_side == -1) fb *= 0.5;
      last_side = -1;
    } else {
      b = x;
      fb = fx;
      if (last_side == +1) fa *= 0.5;
      last_side = +1;
    }

    if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      throw swkb::numerical_error("bracket collapsed at x = " + std::to_string(x) +
                                  " with |f| = " + std::to_string(std::abs(fx)) +
                                  " above tolerance");
    }
  }
  throw swkb::numerical_error("root finder did not converge in " +
                              std::to_string(opts.max_iterations) + " iterations");
}

}  // namespace swkb
