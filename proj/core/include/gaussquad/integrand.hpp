#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaussquad {

/// The smooth factor f of an integral f(x) exp(-alpha^2 (x - beta)^2).
///
/// `eval` must be deterministic. `derivative_bound`, when present, maps an
/// order k to an upper bound for sup |f^(k)| on the integration domain and
/// feeds the error predictors.
struct Integrand {
  std::function<double(double)> eval;
  std::function<double(int)> derivative_bound;
  std::string label;

  double operator()(double x) const { return eval(x); }
  bool has_derivative_bound() const noexcept { return static_cast<bool>(derivative_bound); }
};

Integrand make_integrand(std::function<double(double)> eval, std::string label = "f");

// Built-in integrands used by the tables and the CLI.
//   const1: f = 1
//   x2:     f = x^2
//   expx2:  f = exp(-x^2)
//   step:   f = 1 on [0, 1/2], 1/2 on (1/2, 1]
Integrand const1_integrand();
Integrand x2_integrand();
Integrand expx2_integrand();
Integrand step_integrand();

/// Looks up a built-in by label; std::nullopt when unknown.
std::optional<Integrand> builtin_integrand(std::string_view label);
std::vector<std::string> builtin_integrand_labels();

/// Closed-form value of the integral over [0, 1] of f(x) exp(-alpha^2 x^2) for a
/// built-in integrand label; std::nullopt when no closed form is known.
std::optional<double> reference_integral(std::string_view label, double alpha);

}  // namespace gaussquad
