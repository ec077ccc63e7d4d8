#include "gaussquad/cheb_rule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "gaussquad/error.hpp"
#include "gaussquad/specfun.hpp"
#include "gaussquad/sum.hpp"

namespace gaussquad {
namespace {

void check_rule_degree(int m, int degree_cap) {
  if (m < 0) throw DomainError("Chebyshev rule: degree must be nonnegative");
  if (m > degree_cap) {
    throw DomainError("Chebyshev rule: degree " + std::to_string(m) + " exceeds the cap " +
                      std::to_string(degree_cap) +
                      "; the power-basis conversion is ill-conditioned beyond it");
  }
}

double node_angle(int j, int m) { return (2.0 * j + 1.0) * specfun::kPi / (2.0 * m + 2.0); }

// cos(p pi / q) for integers p >= 0, q > 0, reduced to the first octant so
// exact zeros come out as 0.
double cos_pi_ratio(long p, long q) {
  p %= 2 * q;
  if (p > q) p = 2 * q - p;
  double sign = 1.0;
  if (2 * p > q) {
    p = q - p;
    sign = -1.0;
  }
  // Extended precision so the rounded result is within an ulp.
  const long double pi = 3.141592653589793238462643383279502884L;
  if (4 * p > q) return sign * static_cast<double>(std::sin((q - 2 * p) * pi / (2 * q)));
  return sign * static_cast<double>(std::cos(p * pi / q));
}

// Exact integer binomial for the small arguments used here.
double small_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace

std::vector<double> chebyshev_nodes(int m) {
  if (m < 0) throw DomainError("chebyshev_nodes: degree must be nonnegative");
  std::vector<double> nodes(static_cast<std::size_t>(m) + 1);
  for (int j = 0; 2 * j < m; ++j) {
    const double x = cos_pi_ratio(2 * j + 1, 2 * m + 2);
    nodes[j] = x;
    nodes[m - j] = -x;
  }
  if (m % 2 == 0) nodes[m / 2] = 0.0;
  return nodes;
}

double chebyshev_series(std::span<const double> c, double x) {
  if (c.empty()) return 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t j = c.size() - 1; j >= 1; --j) {
    const double b0 = 2.0 * x * b1 - b2 + c[j];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + 0.5 * c[0];
}

ChebyshevRule::ChebyshevRule(int m, int degree_cap)
    : m_(m), degree_cap_(degree_cap) {
  check_rule_degree(m, degree_cap);
  nodes_ = chebyshev_nodes(m);
  angles_.resize(nodes_.size());
  for (int j = 0; j <= m; ++j) angles_[j] = node_angle(j, m);
  // cos(j theta_k) = cos(j (2k+1) pi / (2m+2)), tabulated by exact reduction.
  const auto count = static_cast<std::size_t>(m) + 1;
  cosines_.resize(count * count);
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= m; ++k) {
      cosines_[j * count + k] = cos_pi_ratio(static_cast<long>(j) * (2 * k + 1), 2L * m + 2);
    }
  }
  power_numbers_.resize(static_cast<std::size_t>(m) + 1);
  for (int j = 1; j <= m; ++j) {
    auto& row = power_numbers_[j];
    row.resize(static_cast<std::size_t>(j / 2) + 1);
    for (int k = 0; k <= j / 2; ++k) row[k] = monomial_coefficient(j, j - 2 * k) / j;
  }
}

double ChebyshevRule::power_number(int j, int k) const {
  if (j < 1 || j > m_ || k < 0 || k > j / 2) return 0.0;
  return power_numbers_[j][k];
}

double ChebyshevRule::monomial_coefficient(int j, int p) const {
  if (j == 0) return p == 0 ? 1.0 : 0.0;
  if (p < 0 || p > j || (j - p) % 2 != 0) return 0.0;
  // j A_{j,k} = (-1)^k 2^(j-2k-1) (C(j-k, k) + C(j-k-1, k-1)), an integer.
  const int k = (j - p) / 2;
  const double magnitude =
      std::ldexp(small_binomial(j - k, k) + small_binomial(j - k - 1, k - 1), j - 2 * k - 1);
  return (k % 2 == 0) ? magnitude : -magnitude;
}

std::vector<double> ChebyshevRule::coefficients(const Integrand& f) const {
  const std::size_t count = nodes_.size();
  std::vector<double> values(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double v = f(nodes_[k]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrand '" << f.label << "' is not finite at Chebyshev node " << k
          << " (x = " << nodes_[k] << ")";
      throw EvaluationError(msg.str(), nodes_[k], k);
    }
    values[k] = v;
  }
  std::vector<double> c(count);
  const double scale = 2.0 / static_cast<double>(count);
  for (std::size_t j = 0; j < count; ++j) {
    CompensatedSum s;
    for (std::size_t k = 0; k < count; ++k) {
      s += values[k] * cosines_[j * count + k];
    }
    c[j] = scale * s.value();
  }
  return c;
}

double ChebyshevRule::integrate(std::span<const double> c, const MomentVector& w) const {
  if (c.size() != nodes_.size() || w.k_max() < m_) {
    throw DomainError("ChebyshevRule::integrate: coefficient/moment length mismatch");
  }
  CompensatedSum q;
  q += 0.5 * c[0] * w[0];
  for (int j = 1; j <= m_; ++j) {
    if (c[j] == 0.0) continue;
    CompensatedSum tj;
    for (int k = 0; k <= j / 2; ++k) {
      tj += monomial_coefficient(j, j - 2 * k) * w[static_cast<std::size_t>(j - 2 * k)];
    }
    q += c[j] * tj.value();
  }
  return q.value();
}

double ChebyshevRule::integrate(const Integrand& f, const GaussianWeight& weight) const {
  const auto c = coefficients(f);
  const auto w = moments_any_beta(weight, m_, degree_cap_);
  return integrate(c, w);
}

std::vector<double> chebyshev_coefficients(const Integrand& f, int m) {
  if (m < 0) throw DomainError("chebyshev_coefficients: degree must be nonnegative");
  return ChebyshevRule(m, std::max(m, kDefaultDegreeCap)).coefficients(f);
}

double basic_rule(const Integrand& f, int m, const GaussianWeight& weight, int degree_cap) {
  return ChebyshevRule(m, degree_cap).integrate(f, weight);
}

double basic_rule_error_bound(int m, double alpha, double deriv_bound) {
  if (m < 0) throw DomainError("basic_rule_error_bound: degree must be nonnegative");
  if (!(alpha > 0)) throw DomainError("basic_rule_error_bound: alpha must be positive");
  return specfun::kSqrtPi / (std::ldexp(specfun::factorial(m + 1), m) * alpha) * deriv_bound;
}

}  // namespace gaussquad
