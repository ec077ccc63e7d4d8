#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gaussquad/integrand.hpp"
#include "gaussquad/moments.hpp"

namespace gaussquad {

/// Break-points 0 = x_0 < x_1 < ... < x_n = 1 with x_j = alpha^((j-1)/(n-1) - 1)
/// for j >= 1, so x_1 = 1/alpha and the ratio x_{j+1}/x_j is constant.
struct GradedMesh {
  double alpha = 0.0;
  int n = 0;
  std::vector<double> breakpoints;
  /// max(1/alpha, 1 - alpha^(-1/(n-1))), an upper bound for every h_j.
  double eta = 0.0;

  /// Length of subinterval j, 1 <= j <= n.
  double h(int j) const { return breakpoints[j] - breakpoints[j - 1]; }
};

/// Throws DomainError for alpha <= 1 or n < 2.
GradedMesh graded_mesh(double alpha, int n);

/// Affine map of [-1, 1] onto [x_{j-1}, x_j] together with the weight it
/// induces: alpha^2 x^2 = alpha_j^2 (t - beta_j)^2.
struct SubintervalTransform {
  int j = 0;
  double h = 0.0;
  double alpha_j = 0.0;
  double beta_j = 0.0;
  double jacobian = 0.0;
  double center = 0.0;

  double map(double t) const { return jacobian * t + center; }
  GaussianWeight weight() const { return GaussianWeight(alpha_j, beta_j); }
};

SubintervalTransform subinterval_transform(const GradedMesh& mesh, int j);

/// f_j(t) = (h/2) f(h t / 2 + (x_{j-1} + x_j) / 2).
Integrand transformed_integrand(const Integrand& f, const SubintervalTransform& tr);

enum class Scheme { QuadP, QuadE, Basic };

const char* scheme_name(Scheme s) noexcept;

struct IntervalResult {
  int j = 0;
  int m = 0;
  double value = 0.0;
};

struct QuadratureReport {
  double value = 0.0;
  std::size_t node_count = 0;
  std::vector<IntervalResult> per_interval;
  Scheme scheme = Scheme::QuadP;
  double alpha = 0.0;
  int n = 0;
  /// Degree used on each subinterval, in order.
  std::vector<int> degrees;
  /// Warnings that do not stop the computation, e.g. the quade sufficient condition failing.
  std::vector<std::string> advisories;
};

/// Q^alpha_{n,m}: degree m on every subinterval of the graded mesh.
/// Uses (m+1) n evaluations of f. A non-finite f raises EvaluationError
/// carrying the subinterval index and the point in [0, 1].
QuadratureReport quadp(const Integrand& f, double alpha, int n, int m,
                       int degree_cap = kDefaultDegreeCap);

/// m_j = ceil(n (n-1) / (n+1-j)), j = 1..n.
std::vector<int> quade_degrees(int n);

struct QuadeOptions {
  /// Largest n accepted. n = 6 gives max m_j = 30.
  int max_n = 6;
  int degree_cap = kDefaultDegreeCap;
};

/// Q^alpha_n with the per-interval degrees of quade_degrees(n).
QuadratureReport quade(const Integrand& f, double alpha, int n, const QuadeOptions& options = {});

/// (n-1)(ln(n+1+e) - 1) >= ln alpha. Sufficient for the exponential bound,
/// not needed to run quade.
bool quade_condition(double alpha, int n);

/// sqrt(pi) eta^m / (2^(2m+1) (m+1)! alpha) * deriv_bound.
double quadp_error_bound(double alpha, int n, int m, double deriv_bound);

/// (n+1)^(-1/2) (2 alpha)^(-n-1): the QuadE error up to an unspecified constant.
double quade_error_shape(double alpha, int n);

/// Which composite scheme a reduction should use, and its parameters.
struct SchemeChoice {
  Scheme scheme = Scheme::QuadP;
  int n = 10;
  int m = 4;
};

/// Integral over [0, 1] of f(x) exp(-alpha^2 (x - beta)^2) by one basic rule
/// of degree m after the affine map of [0, 1] onto [-1, 1]. Works for any
/// alpha > 0 and any finite beta, which makes it the fallback for alpha <= 1
/// and for peaks outside (0, 1).
QuadratureReport integrate_affine(const Integrand& f, double alpha, double beta, int m,
                                  int degree_cap = kDefaultDegreeCap);

struct ShiftedReport {
  QuadratureReport left;
  QuadratureReport right;
  double value = 0.0;
};

/// Integral over [0, 1] of f(x) exp(-alpha^2 (x - beta)^2) for a peak inside
/// (0, 1). Split at beta; each half is mapped onto [0, 1] with the peak at 0,
///   left:  beta     * integral of f(beta (1 - s))         exp(-(alpha beta)^2 s^2)
///   right: (1-beta) * integral of f(beta + (1 - beta) s)  exp(-(alpha (1-beta))^2 s^2)
/// and handed to the chosen scheme. A half whose scaled alpha is <= 1 uses
/// integrate_affine instead. Throws DomainError unless 0 < beta < 1.
ShiftedReport integrate_shifted(const Integrand& f, double alpha, double beta,
                                const SchemeChoice& choice = {});

}  // namespace gaussquad
