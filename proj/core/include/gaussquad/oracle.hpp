#pragma once

#include <functional>

#include "gaussquad/integrand.hpp"
#include "gaussquad/moments.hpp"

namespace gaussquad {

/// Smallest tolerance the adaptive integrator accepts.
inline constexpr double kOracleMinTolerance = 1e-14;

struct OracleOptions {
  double tol = kOracleMinTolerance;
  /// Refinement budget: largest number of subintervals kept.
  int max_intervals = 20000;
};

struct OracleResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Globally adaptive 7-15 Gauss-Kronrod bisection of g over [a, b]. The
/// interval with the largest error estimate is split until the summed
/// estimate is <= tol * max(|I|, integral of |g|).
///
/// Throws DomainError for tol < 1e-14 or an empty interval, OracleError when
/// the budget runs out first.
OracleResult adaptive_integrate(const std::function<double(double)>& g, double a, double b,
                                const OracleOptions& options = {});

/// Integral over [a, b] (default [-1, 1]) of f(x) exp(-alpha^2 (x - beta)^2).
double adaptive_oracle(const Integrand& f, const GaussianWeight& weight,
                       double tol = kOracleMinTolerance, double a = -1.0, double b = 1.0);

}  // namespace gaussquad
