#pragma once

#include <cstddef>

#include "gaussquad/integrand.hpp"
#include "gaussquad/moments.hpp"

namespace gaussquad {

enum class UniformKind { Trapezoid, Simpson };

/// Equal-width composite rules on [0, 1]. `n` counts subintervals; Simpson
/// uses one panel per subinterval, so 2n+1 points with shared endpoints.
struct UniformRule {
  UniformKind kind = UniformKind::Simpson;
  int n = 1;

  double operator()(const Integrand& g) const;
  std::size_t node_count() const noexcept;
};

/// Throws DomainError for n < 1.
double composite_trapezoid(const Integrand& g, int n);
double composite_simpson(const Integrand& g, int n);

/// g(x) = f(x) exp(-alpha^2 (x - beta)^2), for feeding the uniform rules.
Integrand weighted_integrand(const Integrand& f, const GaussianWeight& weight);

}  // namespace gaussquad
