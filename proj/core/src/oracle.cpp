#include "gaussquad/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "gaussquad/error.hpp"
#include "gaussquad/sum.hpp"

namespace gaussquad {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double a;
  double b;
  double value;
  double abs_value;
  double error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gk15(const std::function<double(double)>& g, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = g(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_k = std::fabs(kronrod);
  std::array<double, 15> fv{};
  fv[7] = fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double f1 = g(center - dx);
    const double f2 = g(center + dx);
    fv[i] = f1;
    fv[14 - i] = f2;
    kronrod += kWgk[i] * (f1 + f2);
    abs_k += kWgk[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
  }
  for (double v : fv) {
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "adaptive oracle: integrand not finite on [" << a << ", " << b << "]";
      throw OracleError(msg.str());
    }
  }
  // QUADPACK's scaled estimate: |K - G| overstates the Kronrod error badly.
  const double mean = kronrod * 0.5;
  double asc = std::fabs(fc - mean) * kWgk[7];
  for (int i = 0; i < 7; ++i) {
    asc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
  }
  asc *= half;
  double err = std::fabs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  return Piece{a, b, kronrod * half, abs_k * std::fabs(half), err};
}

}  // namespace

OracleResult adaptive_integrate(const std::function<double(double)>& g, double a, double b,
                                const OracleOptions& options) {
  if (!(options.tol >= kOracleMinTolerance)) {
    throw DomainError("adaptive oracle: tolerance must be at least 1e-14");
  }
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("adaptive oracle: need finite a < b");
  }
  std::priority_queue<Piece> heap;
  const Piece first = gk15(g, a, b);
  heap.push(first);
  double value = first.value;
  double abs_value = first.abs_value;
  double error = first.error;
  int count = 1;
  while (error > options.tol * std::max(std::fabs(value), abs_value)) {
    if (count >= options.max_intervals) {
      std::ostringstream msg;
      msg << "adaptive oracle: " << count << " intervals used, error estimate " << error
          << " still above tolerance " << options.tol;
      throw OracleError(msg.str());
    }
    const Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Piece left = gk15(g, worst.a, mid);
    const Piece right = gk15(g, mid, worst.b);
    value += left.value + right.value - worst.value;
    abs_value += left.abs_value + right.abs_value - worst.abs_value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Final value summed afresh to drop the drift of the running updates.
  CompensatedSum total;
  CompensatedSum total_error;
  while (!heap.empty()) {
    total += heap.top().value;
    total_error += heap.top().error;
    heap.pop();
  }
  return OracleResult{total.value(), total_error.value(), count};
}

double adaptive_oracle(const Integrand& f, const GaussianWeight& weight, double tol, double a,
                       double b) {
  const auto g = [&f, &weight](double x) { return f(x) * weight(x); };
  return adaptive_integrate(g, a, b, OracleOptions{tol, 20000}).value;
}

}  // namespace gaussquad
