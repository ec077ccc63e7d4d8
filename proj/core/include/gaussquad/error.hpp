#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaussquad {

/// Raised when an argument lies outside the domain of an operation (for
/// example a graded mesh with alpha <= 1, or a degree above the cap).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An integrand returned a non-finite value. Carries where it happened.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double x, std::size_t node,
                  std::size_t interval = 0)
      : std::runtime_error(what), x_(x), node_(node), interval_(interval) {}

  double x() const noexcept { return x_; }
  std::size_t node() const noexcept { return node_; }
  /// 1-based subinterval index, 0 when raised outside a composite scheme.
  std::size_t interval() const noexcept { return interval_; }

 private:
  double x_;
  std::size_t node_;
  std::size_t interval_;
};

/// The adaptive reference integrator could not reach its tolerance.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gaussquad
