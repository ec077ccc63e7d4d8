#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gaussquad {

/// Degree cap shared by the moment formulas and the basic rule.
inline constexpr int kDefaultDegreeCap = 40;

/// exp(-alpha^2 (x - beta)^2): alpha is 1/sqrt(2) times the reciprocal
/// standard deviation, beta the peak location.
class GaussianWeight {
 public:
  /// Throws DomainError unless alpha is finite and positive and beta finite.
  GaussianWeight(double alpha, double beta = 0.0);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  /// Standard deviation 1 / (sqrt(2) alpha).
  double c0() const noexcept { return c0_; }

  double operator()(double x) const noexcept;

  /// Same width, peak reflected through the origin.
  GaussianWeight reflected() const { return GaussianWeight(alpha_, -beta_); }

 private:
  double alpha_;
  double beta_;
  double c0_;
};

/// Values w_k = integral over [-1, 1] of x^k exp(-alpha^2 (x - beta)^2), k = 0..k_max.
class MomentVector {
 public:
  MomentVector(GaussianWeight weight, std::vector<double> values);

  const GaussianWeight& weight() const noexcept { return weight_; }
  int k_max() const noexcept { return static_cast<int>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  GaussianWeight weight_;
  std::vector<double> values_;
};

/// Half-line moment M_j[alpha, b] = integral over [0, b] of x^j exp(-alpha^2 x^2).
///
/// With x = (alpha b)^2 and s = (j + 1) / 2, the closed forms (odd j: finite
/// sum times exp; even j: erf term minus a double sum over half-integer
/// Gammas) are used when x >= s, where the subtraction loses at most a bit.
/// Below that the closed form cancels catastrophically (the result is
/// ~ b^(j+1)/(j+1) while each term is ~ Gamma(s) alpha^(-j-1)), so the
/// positive Kummer series b^(j+1) e^(-x) sum (2x)^n / ((j+1)(j+3)...(j+2n+1))
/// is summed instead.
///
/// Throws DomainError for j outside [0, degree_cap], alpha <= 0 or b <= 0.
double moment_base(int j, double alpha, double b, int degree_cap = kDefaultDegreeCap);

/// Closed form only (no regime switch). Exposed for diagnostics and tests.
double moment_base_closed_form(int j, double alpha, double b,
                               int degree_cap = kDefaultDegreeCap);

/// Tail moment: integral over [a, inf) of x^j exp(-alpha^2 x^2), a >= 0.
/// Every term of the closed form is positive, so it is accurate for large a.
double moment_tail(int j, double alpha, double a, int degree_cap = kDefaultDegreeCap);

/// Integral over [a, b] of x^j exp(-alpha^2 x^2) with 0 <= a < b. Differences
/// tails when alpha a is large, half-line moments otherwise.
double moment_between(int j, double alpha, double a, double b,
                      int degree_cap = kDefaultDegreeCap);

/// |1 + beta| below this counts as beta = -1.
inline constexpr double kBetaMinusOneTolerance = 1e-12;

/// Moments w_0..w_{k_max} for beta <= 0 via the binomial expansion over
/// half-line moments, choosing the branch by beta (-1 < beta <= 0,
/// beta < -1, beta = -1). Sums are compensated.
///
/// Throws DomainError when beta > 0 (use reflect_moments) or k_max is out of
/// [0, degree_cap].
MomentVector weight_moments(const GaussianWeight& weight, int k_max,
                            int degree_cap = kDefaultDegreeCap);

/// Given moments for (alpha, -beta), returns those for (alpha, beta):
/// w_k(beta) = (-1)^k w_k(-beta).
MomentVector reflect_moments(const MomentVector& moments);

/// weight_moments for any sign of beta, reflecting when beta > 0.
MomentVector moments_any_beta(const GaussianWeight& weight, int k_max,
                              int degree_cap = kDefaultDegreeCap);

/// Binomial coefficient C(k, j) from a Pascal row.
double binomial(int k, int j);

}  // namespace gaussquad
