#pragma once

#include <stdexcept>
#include <string>

namespace swkb {

/// Argument outside the mathematical domain of an operation (theta at or
/// beyond 0 or pi, E <= 0 where a classical region is required, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to deliver: unbracketed root, eigenvalue
/// bisection that did not converge, a well whose integrand went negative.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
  if (!condition) throw swkb::domain_error(what);
}

}  // namespace detail
}  // namespace swkb
