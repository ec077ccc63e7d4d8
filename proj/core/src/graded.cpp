#include "gaussquad/graded.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "gaussquad/cheb_rule.hpp"
#include "gaussquad/error.hpp"
#include "gaussquad/specfun.hpp"

namespace gaussquad {
namespace {

// One basic rule on subinterval j, with evaluation failures relabelled in
// the coordinates of the caller's integrand.
double integrate_piece(const ChebyshevRule& rule, const Integrand& f, const SubintervalTransform& tr) {
  std::vector<double> c;
  try {
    c = rule.coefficients(transformed_integrand(f, tr));
  } catch (const EvaluationError& e) {
    const double x = tr.map(e.x());
    throw EvaluationError("integrand '" + f.label + "' is not finite at x = " + std::to_string(x) +
                              " (subinterval " + std::to_string(tr.j) + ", node " +
                              std::to_string(e.node()) + ")",
                          x, e.node(), static_cast<std::size_t>(tr.j));
  }
  return rule.integrate(c, weight_moments(tr.weight(), rule.degree(), rule.degree_cap()));
}

double ascending_total(const std::vector<IntervalResult>& parts) {
  double total = 0.0;
  for (const auto& p : parts) total += p.value;
  return total;
}

}  // namespace

GradedMesh graded_mesh(double alpha, int n) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw DomainError("graded mesh undefined for alpha <= 1; use the basic rule on [0,1] directly");
  }
  if (n < 2) throw DomainError("graded mesh needs n >= 2 subintervals");
  GradedMesh mesh;
  mesh.alpha = alpha;
  mesh.n = n;
  mesh.breakpoints.resize(static_cast<std::size_t>(n) + 1);
  mesh.breakpoints[0] = 0.0;
  mesh.breakpoints[1] = 1.0 / alpha;
  for (int j = 2; j < n; ++j) {
    mesh.breakpoints[j] = std::pow(alpha, static_cast<double>(j - n) / (n - 1.0));
  }
  mesh.breakpoints[n] = 1.0;
  mesh.eta = std::max(1.0 / alpha, 1.0 - std::pow(alpha, -1.0 / (n - 1.0)));
  return mesh;
}

SubintervalTransform subinterval_transform(const GradedMesh& mesh, int j) {
  if (j < 1 || j > mesh.n) throw DomainError("subinterval index out of range");
  const double lo = mesh.breakpoints[j - 1];
  const double hi = mesh.breakpoints[j];
  SubintervalTransform tr;
  tr.j = j;
  tr.h = hi - lo;
  tr.alpha_j = mesh.alpha * tr.h / 2.0;
  tr.beta_j = -(lo + hi) / tr.h;
  tr.jacobian = tr.h / 2.0;
  tr.center = (lo + hi) / 2.0;
  return tr;
}

Integrand transformed_integrand(const Integrand& f, const SubintervalTransform& tr) {
  const double jac = tr.jacobian;
  const double center = tr.center;
  auto eval = [f, jac, center](double t) { return jac * f(jac * t + center); };
  return Integrand{eval, {}, f.label};
}

const char* scheme_name(Scheme s) noexcept {
  switch (s) {
    case Scheme::QuadP:
      return "quadp";
    case Scheme::QuadE:
      return "quade";
    case Scheme::Basic:
      return "basic";
  }
  return "unknown";
}

QuadratureReport quadp(const Integrand& f, double alpha, int n, int m, int degree_cap) {
  if (m < 1) throw DomainError("quadp: degree m must be at least 1");
  const GradedMesh mesh = graded_mesh(alpha, n);
  const ChebyshevRule rule(m, degree_cap);
  QuadratureReport report;
  report.scheme = Scheme::QuadP;
  report.alpha = alpha;
  report.n = n;
  report.degrees.assign(static_cast<std::size_t>(n), m);
  for (int j = 1; j <= n; ++j) {
    const double part = integrate_piece(rule, f, subinterval_transform(mesh, j));
    report.per_interval.push_back({j, m, part});
    report.node_count += static_cast<std::size_t>(m) + 1;
  }
  report.value = ascending_total(report.per_interval);
  return report;
}

std::vector<int> quade_degrees(int n) {
  if (n < 2) throw DomainError("quade_degrees: n must be at least 2");
  std::vector<int> m(static_cast<std::size_t>(n));
  const int top = n * (n - 1);
  for (int j = 1; j <= n; ++j) {
    const int denom = n + 1 - j;
    m[j - 1] = (top + denom - 1) / denom;
  }
  return m;
}

QuadratureReport quade(const Integrand& f, double alpha, int n, const QuadeOptions& options) {
  if (n > options.max_n) {
    throw DomainError("quade: n = " + std::to_string(n) + " exceeds the configured cap " +
                      std::to_string(options.max_n) + " (largest degree would be n(n-1) = " +
                      std::to_string(n * (n - 1)) + ")");
  }
  const auto degrees = quade_degrees(n);
  if (degrees.back() > options.degree_cap) {
    throw DomainError("quade: degree " + std::to_string(degrees.back()) +
                      " exceeds the degree cap " + std::to_string(options.degree_cap) +
                      "; the power-basis rule is unstable beyond it");
  }
  const GradedMesh mesh = graded_mesh(alpha, n);

  QuadratureReport report;
  report.scheme = Scheme::QuadE;
  report.alpha = alpha;
  report.n = n;
  report.degrees = degrees;
  if (!quade_condition(alpha, n)) {
    report.advisories.push_back("condition (n-1)(ln(n+1+e)-1) >= ln(alpha) fails for alpha = " +
                                std::to_string(alpha) + ", n = " + std::to_string(n) +
                                "; the exponential error bound is not guaranteed");
  }
  std::map<int, ChebyshevRule> rules;
  for (int j = 1; j <= n; ++j) {
    const int m = degrees[j - 1];
    auto it = rules.find(m);
    if (it == rules.end()) it = rules.emplace(m, ChebyshevRule(m, options.degree_cap)).first;
    const double part = integrate_piece(it->second, f, subinterval_transform(mesh, j));
    report.per_interval.push_back({j, m, part});
    report.node_count += static_cast<std::size_t>(m) + 1;
  }
  report.value = ascending_total(report.per_interval);
  return report;
}

bool quade_condition(double alpha, int n) {
  if (!(alpha > 1.0) || n < 2) throw DomainError("quade_condition: need alpha > 1 and n >= 2");
  return (n - 1.0) * (std::log(n + 1.0 + std::exp(1.0)) - 1.0) >= std::log(alpha);
}

double quadp_error_bound(double alpha, int n, int m, double deriv_bound) {
  if (m < 0) throw DomainError("quadp_error_bound: degree must be nonnegative");
  const double eta = graded_mesh(alpha, n).eta;
  return specfun::kSqrtPi * std::pow(eta, m) /
         (std::ldexp(specfun::factorial(m + 1), 2 * m + 1) * alpha) * deriv_bound;
}

double quade_error_shape(double alpha, int n) {
  if (!(alpha > 0) || n < 1) throw DomainError("quade_error_shape: need alpha > 0 and n >= 1");
  return std::pow(2.0 * alpha, -(n + 1.0)) / std::sqrt(n + 1.0);
}

QuadratureReport integrate_affine(const Integrand& f, double alpha, double beta, int m,
                                  int degree_cap) {
  const GaussianWeight weight(alpha / 2.0, 2.0 * beta - 1.0);
  const ChebyshevRule rule(m, degree_cap);
  SubintervalTransform tr;
  tr.j = 1;
  tr.h = 1.0;
  tr.alpha_j = weight.alpha();
  tr.beta_j = weight.beta();
  tr.jacobian = 0.5;
  tr.center = 0.5;
  std::vector<double> c;
  try {
    c = rule.coefficients(transformed_integrand(f, tr));
  } catch (const EvaluationError& e) {
    const double x = tr.map(e.x());
    throw EvaluationError("integrand '" + f.label + "' is not finite at x = " + std::to_string(x),
                          x, e.node(), 1);
  }
  QuadratureReport report;
  report.scheme = Scheme::Basic;
  report.alpha = alpha;
  report.n = 1;
  report.degrees = {m};
  report.value = rule.integrate(c, moments_any_beta(weight, m, degree_cap));
  report.per_interval.push_back({1, m, report.value});
  report.node_count = static_cast<std::size_t>(m) + 1;
  return report;
}

namespace {

QuadratureReport run_choice(const Integrand& g, double alpha, const SchemeChoice& choice) {
  if (alpha > 1.0) {
    switch (choice.scheme) {
      case Scheme::QuadP:
        return quadp(g, alpha, choice.n, choice.m);
      case Scheme::QuadE:
        return quade(g, alpha, choice.n);
      case Scheme::Basic:
        break;
    }
  }
  const int m = choice.scheme == Scheme::QuadE ? quade_degrees(choice.n).back() : choice.m;
  return integrate_affine(g, alpha, 0.0, m);
}

}  // namespace

ShiftedReport integrate_shifted(const Integrand& f, double alpha, double beta,
                                const SchemeChoice& choice) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("integrate_shifted: beta must lie strictly inside (0, 1); "
                      "use integrate_affine for other peak locations");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("integrate_shifted: alpha must be finite and positive");
  }
  const double right_len = 1.0 - beta;
  const Integrand left{[&f, beta](double s) { return beta * f(beta * (1.0 - s)); }, {},
                       f.label};
  const Integrand right{[&f, beta, right_len](double s) { return right_len * f(beta + right_len * s); },
                        {}, f.label};
  ShiftedReport out;
  out.left = run_choice(left, alpha * beta, choice);
  out.right = run_choice(right, alpha * right_len, choice);
  out.value = out.left.value + out.right.value;
  return out;
}

}  // namespace gaussquad
