#include "gaussquad/integrand.hpp"

#include <cmath>
#include <utility>

#include "gaussquad/specfun.hpp"

namespace gaussquad {

Integrand make_integrand(std::function<double(double)> eval, std::string label) {
  return Integrand{std::move(eval), {}, std::move(label)};
}

Integrand const1_integrand() {
  return Integrand{[](double) { return 1.0; }, [](int k) { return k == 0 ? 1.0 : 0.0; }, "const1"};
}

Integrand x2_integrand() {
  // Bounds on [0, 1].
  return Integrand{[](double x) { return x * x; },
                   [](int k) {
                     if (k == 0) return 1.0;
                     if (k <= 2) return 2.0;
                     return 0.0;
                   },
                   "x2"};
}

Integrand expx2_integrand() {
  // f^(k) = (-1)^k H_k(x) e^(-x^2), and |H_k(x)| e^(-x^2/2) <= 1.0865 sqrt(2^k k!).
  return Integrand{[](double x) { return std::exp(-x * x); },
                   [](int k) {
                     return 1.0865 * std::sqrt(std::ldexp(specfun::factorial(k), k));
                   },
                   "expx2"};
}

Integrand step_integrand() {
  return Integrand{[](double x) { return x <= 0.5 ? 1.0 : 0.5; }, {}, "step"};
}

std::optional<Integrand> builtin_integrand(std::string_view label) {
  if (label == "const1") return const1_integrand();
  if (label == "x2") return x2_integrand();
  if (label == "expx2") return expx2_integrand();
  if (label == "step") return step_integrand();
  return std::nullopt;
}

std::vector<std::string> builtin_integrand_labels() { return {"const1", "expx2", "step", "x2"}; }

std::optional<double> reference_integral(std::string_view label, double alpha) {
  using specfun::erf;
  using specfun::kSqrtPi;
  if (!(alpha > 0)) return std::nullopt;
  if (label == "const1") return kSqrtPi * erf(alpha) / (2.0 * alpha);
  if (label == "x2") {
    return (kSqrtPi * erf(alpha) / 2.0 - alpha * std::exp(-alpha * alpha)) /
           (2.0 * alpha * alpha * alpha);
  }
  if (label == "expx2") {
    const double s = std::sqrt(alpha * alpha + 1.0);
    return kSqrtPi * erf(s) / (2.0 * s);
  }
  if (label == "step") return kSqrtPi * (erf(alpha) + erf(alpha / 2.0)) / (4.0 * alpha);
  return std::nullopt;
}

}  // namespace gaussquad
