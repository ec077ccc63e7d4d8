#pragma once

#include <span>
#include <vector>

#include "gaussquad/integrand.hpp"
#include "gaussquad/moments.hpp"

namespace gaussquad {

/// The m+1 Chebyshev points of the first kind, cos((2j+1) pi / (2m+2)),
/// in decreasing order.
std::vector<double> chebyshev_nodes(int m);

/// Interpolation coefficients c_0..c_m with p_m = c_0/2 + sum_{j>=1} c_j T_j:
///   c_j = 2/(m+1) sum_k f(x_k) T_j(x_k),  T_j(x_k) = cos(j theta_k).
/// Throws EvaluationError naming the node when f is not finite there.
std::vector<double> chebyshev_coefficients(const Integrand& f, int m);

/// Evaluates c_0/2 + sum c_j T_j(x) by Clenshaw's recurrence.
double chebyshev_series(std::span<const double> coefficients, double x);

/// Interpolatory rule of degree m on [-1, 1] against a Gaussian weight,
/// evaluated in the power basis through the moments w_k:
///   Q = (c_0/2) w_0 + sum_{j=1}^{m} j c_j sum_{k<=j/2} A_{j,k} w_{j-2k},
///   A_{j,k} = (-1)^k (j-k-1)! / (k! (j-2k)!) 2^(j-2k-1).
///
/// The power-basis conversion grows like 2^(j-1), so degrees above the cap
/// are refused.
class ChebyshevRule {
 public:
  explicit ChebyshevRule(int m, int degree_cap = kDefaultDegreeCap);

  int degree() const noexcept { return m_; }
  int degree_cap() const noexcept { return degree_cap_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> angles() const noexcept { return angles_; }

  /// A_{j,k} for 1 <= j <= m, 0 <= k <= j/2. Zero outside that range.
  double power_number(int j, int k) const;

  /// Coefficient of x^p in T_j, i.e. j A_{j,(j-p)/2} (1 for T_0).
  double monomial_coefficient(int j, int p) const;

  std::vector<double> coefficients(const Integrand& f) const;

  /// Q^{alpha,beta}_m[f]. Moments are computed once per call; beta > 0 is
  /// handled by reflection.
  double integrate(const Integrand& f, const GaussianWeight& weight) const;

  /// Same rule with caller-supplied coefficients and moments.
  double integrate(std::span<const double> coefficients, const MomentVector& moments) const;

 private:
  int m_;
  int degree_cap_;
  std::vector<double> nodes_;
  std::vector<double> angles_;
  // cos(j theta_k) at index j (m+1) + k.
  std::vector<double> cosines_;
  // Row j holds A_{j,0..j/2}; row 0 is unused.
  std::vector<std::vector<double>> power_numbers_;
};

/// One-shot Q^{alpha,beta}_m[f].
double basic_rule(const Integrand& f, int m, const GaussianWeight& weight,
                  int degree_cap = kDefaultDegreeCap);

/// sqrt(pi) / (2^m (m+1)! alpha) * deriv_bound, with deriv_bound >= sup |f^(m+1)|.
double basic_rule_error_bound(int m, double alpha, double deriv_bound);

}  // namespace gaussquad
