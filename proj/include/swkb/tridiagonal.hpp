#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "swkb/errors.hpp"

namespace swkb {

/// Real symmetric tridiagonal matrix: diagonal d[0..n), off-diagonal e[0..n-1).
class SymmetricTridiagonal {
 public:
  SymmetricTridiagonal() = default;
  SymmetricTridiagonal(std::vector<double> diagonal, std::vector<double> off_diagonal)
      : d_(std::move(diagonal)), e_(std::move(off_diagonal)) {
    if (d_.empty() || e_.size() + 1 != d_.size()) {
      throw swkb::domain_error("tridiagonal: off-diagonal must have n - 1 entries");
    }
  }

  std::size_t size() const noexcept { return d_.size(); }
  std::span<const double> diagonal() const noexcept { return d_; }
  std::span<const double> off_diagonal() const noexcept { return e_; }

  /// Entry (i, j) of the full matrix.
  double operator()(std::size_t i, std::size_t j) const {
    if (i == j) return d_[i];
    if (i + 1 == j) return e_[i];
    if (j + 1 == i) return e_[j];
    return 0.0;
  }

  /// Number of eigenvalues strictly below x (Sturm count from the LDL^T pivots).
  std::size_t count_below(double x) const {
    const double tiny = std::numeric_limits<double>::min();
    std::size_t count = 0;
    double q = d_[0] - x;
    for (std::size_t i = 0;; ++i) {
      if (q == 0.0) q = -tiny;
      if (q < 0.0) ++count;
      if (i + 1 == d_.size()) break;
      q = (d_[i + 1] - x) - e_[i] * e_[i] / q;
    }
    return count;
  }

  /// Gershgorin interval containing the whole spectrum.
  std::pair<double, double> gershgorin_bounds() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < d_.size(); ++i) {
      const double r = (i > 0 ? std::abs(e_[i - 1]) : 0.0) + (i < e_.size() ? std::abs(e_[i]) : 0.0);
      lo = std::min(lo, d_[i] - r);
      hi = std::max(hi, d_[i] + r);
    }
    return {lo, hi};
  }

  /// The k lowest eigenvalues, ascending, each bisected to an absolute width of tol.
  std::vector<double> lowest_eigenvalues(std::size_t k, double tol = 1e-12) const {
    if (k == 0 || k > size()) throw swkb::domain_error("tridiagonal: need 1 <= k <= n");
    const auto [glo, ghi] = gershgorin_bounds();
    const double pad = 1e-12 * std::max(1.0, std::max(std::abs(glo), std::abs(ghi)));

    std::vector<double> values(k);
    double floor = glo - pad;
    for (std::size_t j = 0; j < k; ++j) {
      // invariant: count_below(lo) <= j < count_below(hi)
      double lo = floor;
      double hi = ghi + pad;
      int it = 0;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // at machine resolution
        if (count_below(mid) > j) hi = mid; else lo = mid;
        if (++it > 400) {
          throw swkb::numerical_error("eigenvalue bisection did not converge for index " +
                                      std::to_string(j));
        }
      }
      values[j] = 0.5 * (lo + hi);
      floor = lo;
    }
    return values;
  }

 private:
  std::vector<double> d_;
  std::vector<double> e_;
};

}  // namespace swkb
