#include "gaussquad/baseline.hpp"

#include "gaussquad/error.hpp"
#include "gaussquad/sum.hpp"

namespace gaussquad {

double composite_trapezoid(const Integrand& g, int n) {
  if (n < 1) throw DomainError("composite_trapezoid: n must be at least 1");
  const double h = 1.0 / n;
  CompensatedSum s;
  s += 0.5 * g(0.0);
  for (int i = 1; i < n; ++i) s += g(static_cast<double>(i) / n);
  s += 0.5 * g(1.0);
  return h * s.value();
}

double composite_simpson(const Integrand& g, int n) {
  if (n < 1) throw DomainError("composite_simpson: n must be at least 1");
  const double h = 1.0 / n;
  CompensatedSum s;
  s += g(0.0);
  for (int i = 0; i < n; ++i) {
    s += 4.0 * g((i + 0.5) / n);
    s += (i + 1 < n ? 2.0 : 1.0) * g(static_cast<double>(i + 1) / n);
  }
  return h / 6.0 * s.value();
}

double UniformRule::operator()(const Integrand& g) const {
  return kind == UniformKind::Trapezoid ? composite_trapezoid(g, n) : composite_simpson(g, n);
}

std::size_t UniformRule::node_count() const noexcept {
  const auto panels = static_cast<std::size_t>(n);
  return kind == UniformKind::Trapezoid ? panels + 1 : 2 * panels + 1;
}

Integrand weighted_integrand(const Integrand& f, const GaussianWeight& weight) {
  return Integrand{[f, weight](double x) { return f(x) * weight(x); }, {}, f.label};
}

}  // namespace gaussquad
