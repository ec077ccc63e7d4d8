#include "gaussquad/moments.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gaussquad/error.hpp"
#include "gaussquad/oracle.hpp"
#include "gaussquad/specfun.hpp"
#include "gaussquad/sum.hpp"

namespace gaussquad {
namespace {

// Beyond this the complement erfc(b alpha) is below the smallest subnormal.
constexpr double kErfSaturation = 38.0;

void check_degree(const char* who, int j, int degree_cap) {
  if (j < 0 || j > degree_cap) {
    throw DomainError(std::string(who) + ": degree " + std::to_string(j) +
                      " outside [0, " + std::to_string(degree_cap) +
                      "]; the power-basis moment expansion is not reliable in double "
                      "precision beyond the cap");
  }
}

void check_alpha(const char* who, double alpha) {
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    throw DomainError(std::string(who) + ": alpha must be finite and positive");
  }
}

const specfun::HalfIntegerGammaTable& half_gamma() {
  static const specfun::HalfIntegerGammaTable table;
  return table;
}

// Sum over l = 1..j, i = 0..l-1 of
//   j! Gamma(l-i-1/2) Gamma(1/2+j-l) b^(2i+1) alpha^(2i-2j) / ((j-l)! (l-i-1)! i! l)
// divided by 2 pi. This is the boundary part of the even closed form,
// M_2j = Gamma(j+1/2)/2 erf(b alpha) alpha^(-1-2j) - exp(-b^2 alpha^2) * S.
double even_boundary_sum(int j, double alpha, double b) {
  const auto& g = half_gamma();
  const double jfact = specfun::factorial(j);
  const double ba = b * alpha;
  const double alpha_pow = std::pow(alpha, -2.0 * j);
  CompensatedSum s;
  for (int l = 1; l <= j; ++l) {
    for (int i = 0; i < l; ++i) {
      const double coef = jfact * g(l - i - 1) * g(j - l) /
                          (specfun::factorial(j - l) * specfun::factorial(l - i - 1) *
                           specfun::factorial(i) * l);
      s += coef * std::pow(ba, 2 * i) * b * alpha_pow;
    }
  }
  return s.value() / (2.0 * specfun::kPi);
}

// Sum over l = lo..j of b^(2l) alpha^(-2-2j+2l) / l!.
double odd_boundary_sum(int j, double alpha, double b, int lo) {
  const double ba2 = (b * alpha) * (b * alpha);
  const double alpha_pow = std::pow(alpha, -2.0 - 2.0 * j);
  CompensatedSum s;
  double term = 1.0;  // (b alpha)^(2l) / l!
  for (int l = 0; l <= j; ++l) {
    if (l >= lo) s += term * alpha_pow;
    term *= ba2 / (l + 1);
  }
  return s.value();
}

double closed_form(int k, double alpha, double b) {
  const double x = (b * alpha) * (b * alpha);
  const double e = std::exp(-x);
  if (k % 2 == 1) {
    const int j = (k - 1) / 2;
    const double half_jfact = 0.5 * specfun::factorial(j);
    const double lead = half_jfact * -std::expm1(-x) * std::pow(alpha, -2.0 - 2.0 * j);
    if (j == 0 || e == 0.0) return lead;
    return lead - half_jfact * e * odd_boundary_sum(j, alpha, b, 1);
  }
  const int j = k / 2;
  const double erf_ba = b * alpha > kErfSaturation ? 1.0 : specfun::erf(b * alpha);
  const double lead = 0.5 * half_gamma()(j) * erf_ba * std::pow(alpha, -1.0 - 2.0 * j);
  if (j == 0 || e == 0.0) return lead;
  return lead - e * even_boundary_sum(j, alpha, b);
}

// b^(k+1) e^(-x) sum_n (2x)^n / ((k+1)(k+3)...(k+2n+1)), x = (alpha b)^2.
// Summed in long double: the terms are positive, so the only loss is
// rounding, and the extra bits make the final double correctly rounded in
// practice.
double kummer_series(int k, double alpha, double b) {
  using ld = long double;
  const ld bl = b;
  const ld x = (bl * alpha) * (bl * alpha);
  ld term = 1.0L / (k + 1);
  ld sum = term;
  for (int n = 1; n < 1000; ++n) {
    term *= 2.0L * x / (k + 2 * n + 1);
    sum += term;
    if (term <= 1e-21L * sum) break;
  }
  return static_cast<double>(std::pow(bl, k + 1) * std::exp(-x) * sum);
}

constexpr double kEps = 0x1p-52;
constexpr double kExpansionTolerance = 1e-12;

double direct_moment(int k, double alpha, double beta) {
  const auto g = [k, alpha, beta](double x) {
    const double t = alpha * (x - beta);
    return std::pow(x, k) * std::exp(-t * t);
  };
  // Split at an interior peak.
  if (beta > -1.0 && beta < 1.0) {
    return adaptive_integrate(g, -1.0, beta).value + adaptive_integrate(g, beta, 1.0).value;
  }
  return adaptive_integrate(g, -1.0, 1.0).value;
}

bool closed_form_is_stable(int k, double alpha, double b) {
  const double x = (b * alpha) * (b * alpha);
  return x >= 0.5 * (k + 1);
}

}  // namespace

GaussianWeight::GaussianWeight(double alpha, double beta)
    : alpha_(alpha), beta_(beta), c0_(1.0 / (std::sqrt(2.0) * alpha)) {
  check_alpha("GaussianWeight", alpha);
  if (!std::isfinite(beta)) throw DomainError("GaussianWeight: beta must be finite");
}

double GaussianWeight::operator()(double x) const noexcept {
  const double t = alpha_ * (x - beta_);
  return std::exp(-t * t);
}

MomentVector::MomentVector(GaussianWeight weight, std::vector<double> values)
    : weight_(weight), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("MomentVector: empty");
}

double binomial(int k, int j) {
  if (j < 0 || j > k) return 0.0;
  std::vector<double> row(static_cast<std::size_t>(k) + 1, 0.0);
  row[0] = 1.0;
  for (int r = 1; r <= k; ++r) {
    for (int c = r; c > 0; --c) row[c] += row[c - 1];
  }
  return row[static_cast<std::size_t>(j)];
}

double moment_base_closed_form(int j, double alpha, double b, int degree_cap) {
  check_degree("moment_base", j, degree_cap);
  check_alpha("moment_base", alpha);
  if (!(b > 0)) throw DomainError("moment_base: upper limit b must be positive");
  return closed_form(j, alpha, b);
}

double moment_base(int j, double alpha, double b, int degree_cap) {
  check_degree("moment_base", j, degree_cap);
  check_alpha("moment_base", alpha);
  if (!(b > 0)) throw DomainError("moment_base: upper limit b must be positive");
  if (closed_form_is_stable(j, alpha, b)) return closed_form(j, alpha, b);
  return kummer_series(j, alpha, b);
}

double moment_tail(int k, double alpha, double a, int degree_cap) {
  check_degree("moment_tail", k, degree_cap);
  check_alpha("moment_tail", alpha);
  if (!(a >= 0)) throw DomainError("moment_tail: lower limit must be nonnegative");
  const double x = (a * alpha) * (a * alpha);
  const double e = std::exp(-x);
  if (k % 2 == 1) {
    const int j = (k - 1) / 2;
    if (e == 0.0) return 0.0;
    return 0.5 * specfun::factorial(j) * e * odd_boundary_sum(j, alpha, a, 0);
  }
  const int j = k / 2;
  const double lead = 0.5 * half_gamma()(j) * specfun::erfc(a * alpha) *
                      std::pow(alpha, -1.0 - 2.0 * j);
  if (j == 0 || e == 0.0) return lead;
  return lead + e * even_boundary_sum(j, alpha, a);
}

double moment_between(int j, double alpha, double a, double b, int degree_cap) {
  if (!(a >= 0) || !(b > a)) throw DomainError("moment_between: need 0 <= a < b");
  if (a == 0.0) return moment_base(j, alpha, b, degree_cap);
  if (closed_form_is_stable(j, alpha, a)) {
    return moment_tail(j, alpha, a, degree_cap) - moment_tail(j, alpha, b, degree_cap);
  }
  return moment_base(j, alpha, b, degree_cap) - moment_base(j, alpha, a, degree_cap);
}

MomentVector weight_moments(const GaussianWeight& weight, int k_max, int degree_cap) {
  check_degree("weight_moments", k_max, degree_cap);
  const double alpha = weight.alpha();
  const double beta = weight.beta();
  if (beta > 0) {
    throw DomainError("weight_moments: beta > 0; compute for -beta and apply reflect_moments");
  }

  const auto kn = static_cast<std::size_t>(k_max) + 1;
  // Pascal rows C(k, j) for k <= k_max.
  std::vector<std::vector<double>> pascal(kn);
  for (std::size_t k = 0; k < kn; ++k) {
    pascal[k].assign(k + 1, 1.0);
    for (std::size_t j = 1; j < k; ++j) pascal[k][j] = pascal[k - 1][j - 1] + pascal[k - 1][j];
  }

  // half[j] holds the j-th half-line quantity of the selected branch and
  // shift is the binomial shift, so w_k = sum_j C(k,j) shift^(k-j) half[j].
  std::vector<double> half(kn);
  double shift = beta;
  if (std::fabs(1.0 + beta) < kBetaMinusOneTolerance) {
    shift = -1.0;
    for (std::size_t j = 0; j < kn; ++j) {
      half[j] = moment_base(static_cast<int>(j), alpha, 2.0, degree_cap);
    }
  } else if (beta > -1.0) {
    for (std::size_t j = 0; j < kn; ++j) {
      const int jj = static_cast<int>(j);
      const double upper = moment_base(jj, alpha, 1.0 - beta, degree_cap);
      const double lower = moment_base(jj, alpha, 1.0 + beta, degree_cap);
      half[j] = (j % 2 == 0) ? upper + lower : upper - lower;
    }
  } else {
    const double a = std::fabs(1.0 + beta);
    const double b = 1.0 - beta;
    for (std::size_t j = 0; j < kn; ++j) {
      half[j] = moment_between(static_cast<int>(j), alpha, a, b, degree_cap);
    }
  }

  std::vector<double> shift_pow(kn);
  shift_pow[0] = 1.0;
  for (std::size_t p = 1; p < kn; ++p) shift_pow[p] = shift_pow[p - 1] * shift;

  std::vector<double> values(kn);
  for (std::size_t k = 0; k < kn; ++k) {
    CompensatedSum s;
    double magnitude = 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
      const double term = pascal[k][j] * shift_pow[k - j] * half[j];
      s += term;
      magnitude += std::fabs(term);
    }
    values[k] = s.value();
    // |w_k| <= w_0, so w_0 is the scale the rule sees. When the expansion
    // cannot resolve w_k at that scale, integrate the entry directly.
    if (8.0 * kEps * magnitude > kExpansionTolerance * values[0]) {
      values[k] = direct_moment(static_cast<int>(k), alpha, beta);
    }
  }
  return MomentVector(weight, std::move(values));
}

MomentVector reflect_moments(const MomentVector& moments) {
  std::vector<double> values(moments.values().begin(), moments.values().end());
  for (std::size_t k = 1; k < values.size(); k += 2) values[k] = -values[k];
  return MomentVector(moments.weight().reflected(), std::move(values));
}

MomentVector moments_any_beta(const GaussianWeight& weight, int k_max, int degree_cap) {
  if (weight.beta() <= 0) return weight_moments(weight, k_max, degree_cap);
  return reflect_moments(weight_moments(weight.reflected(), k_max, degree_cap));
}

}  // namespace gaussquad
