#include "gaussquad/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "gaussquad/error.hpp"

namespace gaussquad::specfun {
namespace {

// Coefficients from W. J. Cody, "Rational Chebyshev approximations for the
// error function", Math. Comp. 23 (1969); the same values as netlib
// specfun/erf.
constexpr std::array<double, 5> kA = {3.16112374387056560e00, 1.13864154151050156e02,
                                      3.77485237685302021e02, 3.20937758913846947e03,
                                      1.85777706184603153e-1};
constexpr std::array<double, 4> kB = {2.36012909523441209e01, 2.44024637934444173e02,
                                      1.28261652607737228e03, 2.84423683343917062e03};
constexpr std::array<double, 9> kC = {5.64188496988670089e-1, 8.88314979438837594e00,
                                      6.61191906371416295e01, 2.98635138197400131e02,
                                      8.81952221241769090e02, 1.71204761263407058e03,
                                      2.05107837782607147e03, 1.23033935479799725e03,
                                      2.15311535474403846e-8};
constexpr std::array<double, 8> kD = {1.57449261107098347e01, 1.17693950891312499e02,
                                      5.37181101862009858e02, 1.62138957456669019e03,
                                      3.29079923573345963e03, 4.36261909014324716e03,
                                      3.43936767414372164e03, 1.23033935480374942e03};
constexpr std::array<double, 6> kP = {3.05326634961232344e-1, 3.60344899949804439e-1,
                                      1.25781726111229246e-1, 1.60837851487422766e-2,
                                      6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr std::array<double, 5> kQ = {2.56852019228982242e00, 1.87295284992346047e00,
                                      5.27905102951428412e-1, 6.05183413124413191e-2,
                                      2.33520497626869185e-3};

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kThresh = 0.46875;
constexpr double kXSmall = 1.11e-16;
constexpr double kXBig = 26.543;
constexpr double kXHuge = 6.71e7;
constexpr double kXMax = 2.53e307;

// erf(y) for 0 <= y <= kThresh.
double erf_small(double y) {
  const double ysq = y > kXSmall ? y * y : 0.0;
  double num = kA[4] * ysq;
  double den = ysq;
  for (int i = 0; i < 3; ++i) {
    num = (num + kA[i]) * ysq;
    den = (den + kB[i]) * ysq;
  }
  return y * (num + kA[3]) / (den + kB[3]);
}

// exp(y^2) erfc(y) for y > kThresh.
double erfcx_large(double y) {
  if (y <= 4.0) {
    double num = kC[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
      num = (num + kC[i]) * y;
      den = (den + kD[i]) * y;
    }
    return (num + kC[7]) / (den + kD[7]);
  }
  if (y >= kXHuge) return y >= kXMax ? 0.0 : kInvSqrtPi / y;
  const double ysq = 1.0 / (y * y);
  double num = kP[5] * ysq;
  double den = ysq;
  for (int i = 0; i < 4; ++i) {
    num = (num + kP[i]) * ysq;
    den = (den + kQ[i]) * ysq;
  }
  const double r = ysq * (num + kP[4]) / (den + kQ[4]);
  return (kInvSqrtPi - r) / y;
}

// exp(-y^2) with y split as head + rest, head a multiple of 1/16, so head^2
// is exact and the rounding in y^2 never reaches the exponential.
double exp_neg_sq(double y) {
  const double head = std::trunc(y * 16.0) / 16.0;
  const double del = (y - head) * (y + head);
  return std::exp(-head * head) * std::exp(-del);
}

// erfc(y) for y > kThresh.
double erfc_large(double y) {
  if (y >= kXBig) return 0.0;
  return exp_neg_sq(y) * erfcx_large(y);
}

}  // namespace

double erf(double x) {
  const double y = std::fabs(x);
  double r;
  if (y <= kThresh) {
    r = erf_small(y);
  } else {
    r = (0.5 - erfc_large(y)) + 0.5;
  }
  return std::signbit(x) ? -r : r;
}

double erfc(double x) {
  const double y = std::fabs(x);
  if (y <= kThresh) return 1.0 - (x < 0 ? -erf_small(y) : erf_small(y));
  const double r = erfc_large(y);
  return x < 0 ? 2.0 - r : r;
}

double erfcx(double x) {
  const double y = std::fabs(x);
  if (y <= kThresh) {
    const double e = x < 0 ? -erf_small(y) : erf_small(y);
    return std::exp(x * x) * (1.0 - e);
  }
  if (x > 0) return erfcx_large(y);
  if (x < -26.628) return std::numeric_limits<double>::infinity();
  const double grow = 1.0 / exp_neg_sq(y);
  return (grow + grow) - erfcx_large(y);
}

HalfIntegerGammaTable::HalfIntegerGammaTable(int cap) {
  if (cap < 0) throw DomainError("half-integer Gamma table: negative cap");
  values_.resize(static_cast<std::size_t>(cap) + 1);
  values_[0] = kSqrtPi;
  for (int j = 0; j < cap; ++j) {
    values_[j + 1] = (0.5 + j) * values_[j];
  }
}

double HalfIntegerGammaTable::operator()(int j) const {
  if (j < 0 || j > cap()) {
    throw DomainError("half_integer_gamma: index " + std::to_string(j) +
                      " outside [0, " + std::to_string(cap()) + "]");
  }
  return values_[static_cast<std::size_t>(j)];
}

double half_integer_gamma(int j, int cap) {
  if (j < 0 || j > cap) {
    throw DomainError("half_integer_gamma: index " + std::to_string(j) +
                      " outside [0, " + std::to_string(cap) + "]");
  }
  double g = kSqrtPi;
  for (int i = 0; i < j; ++i) g *= 0.5 + i;
  return g;
}

double factorial(int n) {
  if (n < 0 || n > kFactorialCap) {
    throw DomainError("factorial: argument " + std::to_string(n) + " outside [0, 170]");
  }
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double double_factorial(int n) {
  if (n < -1 || n > 300) {
    throw DomainError("double_factorial: argument " + std::to_string(n) + " outside [-1, 300]");
  }
  double f = 1.0;
  for (int i = n; i > 1; i -= 2) f *= i;
  return f;
}

double hermite_eval(int m, double t) {
  if (m < 0 || m > kHermiteMaxDegree) {
    throw DomainError("hermite_eval: degree " + std::to_string(m) + " outside [0, 256]");
  }
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * t;
  for (int k = 1; k < m; ++k) {
    const double next = 2.0 * t * cur - 2.0 * k * prev;
    if (std::isinf(next)) return next;
    prev = cur;
    cur = next;
  }
  return cur;
}

double gaussian_derivative(int m, double alpha, double x) {
  if (!(alpha > 0)) throw DomainError("gaussian_derivative: alpha must be positive");
  if (m < 0 || m > kHermiteMaxDegree) {
    throw DomainError("gaussian_derivative: order " + std::to_string(m) + " outside [0, 256]");
  }
  // g_k = (-alpha)^k H_k(alpha x) exp(-alpha^2 x^2)
  const double t = alpha * x;
  double prev = std::exp(-t * t);
  if (m == 0) return prev;
  double cur = -2.0 * alpha * t * prev;
  const double a2 = alpha * alpha;
  for (int k = 1; k < m; ++k) {
    const double next = -2.0 * alpha * t * cur - 2.0 * k * a2 * prev;
    if (std::isinf(next)) return next;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace gaussquad::specfun
