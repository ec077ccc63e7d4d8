#pragma once

#include <cstddef>
#include <vector>

namespace gaussquad::specfun {

inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Default number of half-integer Gamma values kept by the table.
inline constexpr int kHalfGammaCap = 64;
/// Largest n for which n! is finite in double precision.
inline constexpr int kFactorialCap = 170;
inline constexpr int kHermiteMaxDegree = 256;

// Error function family. Rational Chebyshev approximations in three
// regimes (|x| <= 0.46875, 0.46875 < |x| <= 4, |x| > 4) with a split
// exponential for the complement, accurate to a few ulp in double.
double erf(double x);
double erfc(double x);
/// exp(x^2) * erfc(x), finite for large positive x.
double erfcx(double x);

/// Gamma(1/2 + j) for j = 0..cap, built by upward recurrence from sqrt(pi).
class HalfIntegerGammaTable {
 public:
  explicit HalfIntegerGammaTable(int cap = kHalfGammaCap);

  int cap() const noexcept { return static_cast<int>(values_.size()) - 1; }
  /// Throws DomainError when j is negative or above the cap.
  double operator()(int j) const;
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// Gamma(1/2 + j). Throws DomainError for j > cap.
double half_integer_gamma(int j, int cap = kHalfGammaCap);

/// n! as a floating product; DomainError for n < 0 or n > 170.
double factorial(int n);
/// n!! with (-1)!! = 0!! = 1; DomainError outside [-1, 300].
double double_factorial(int n);

/// Physicists' Hermite polynomial H_m(t) by the three-term recurrence.
/// Overflow propagates as +-inf.
double hermite_eval(int m, double t);

/// m-th derivative of exp(-alpha^2 x^2):
///   (-1)^m alpha^m H_m(alpha x) exp(-alpha^2 x^2).
/// The recurrence runs on the scaled sequence so the result stays finite
/// whenever the product is representable.
double gaussian_derivative(int m, double alpha, double x);

}  // namespace gaussquad::specfun
