#include <doctest.h>

#include <cmath>
#include <limits>

#include "gaussquad/error.hpp"
#include "gaussquad/specfun.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace sf = gaussquad::specfun;
using gaussquad::testing::Gen;

TEST_CASE("erf reference points") {
  CHECK(sf::erf(0.0) == 0.0);
  for (const auto& [x, ref] : gaussquad::testing::kErfTable) {
    INFO("x = " << x);
    CHECK(std::fabs(sf::erf(x) - ref) <= 1e-15 * std::max(1.0, std::fabs(ref)));
  }
  CHECK(std::fabs(sf::erf(6.0) - 1.0) <= 1e-16);
  CHECK(sf::erf(40.0) == 1.0);
  CHECK(sf::erf(-40.0) == -1.0);
}

TEST_CASE("erfc and erfcx agree with erf where no cancellation occurs") {
  for (double x : {-3.0, -0.7, 0.0, 0.2, 0.9, 2.0}) {
    CHECK(sf::erfc(x) == doctest::Approx(1.0 - sf::erf(x)).epsilon(1e-14));
  }
  // erfc(5) = 1.5374597944280348502e-12, erfc(10) = 2.0884875837625447570e-45
  CHECK(sf::erfc(5.0) == doctest::Approx(1.5374597944280348502e-12).epsilon(1e-14));
  CHECK(sf::erfc(10.0) == doctest::Approx(2.0884875837625447570e-45).epsilon(1e-14));
  CHECK(sf::erfcx(10.0) == doctest::Approx(0.05614099274382258586).epsilon(1e-14));
  CHECK(sf::erfc(30.0) == 0.0);
}

TEST_CASE("erf is exactly odd") {
  Gen gen(11);
  for (double x : gen.uniforms(1000, -8.0, 8.0)) {
    CHECK(sf::erf(-x) + sf::erf(x) == 0.0);
  }
}

TEST_CASE("erf is nondecreasing") {
  Gen gen(12);
  const auto xs = gen.sorted_uniforms(2000, -7.0, 7.0);
  for (std::size_t i = 1; i < xs.size(); ++i) CHECK(sf::erf(xs[i - 1]) <= sf::erf(xs[i]));
}

TEST_CASE("half-integer Gamma") {
  CHECK(sf::half_integer_gamma(0) == sf::kSqrtPi);
  CHECK(sf::half_integer_gamma(0) == doctest::Approx(1.7724538509055160).epsilon(1e-16));
  CHECK(sf::half_integer_gamma(1) == sf::kSqrtPi / 2.0);
  CHECK(sf::half_integer_gamma(3) == doctest::Approx(3.3233509704478426).epsilon(1e-15));
  for (int j = 0; j < 60; ++j) {
    const double ratio = sf::half_integer_gamma(j + 1) / sf::half_integer_gamma(j);
    CHECK(std::fabs(ratio - (j + 0.5)) <= 1e-15 * (j + 0.5));
  }
  CHECK_THROWS_AS(sf::half_integer_gamma(65), gaussquad::DomainError);
  CHECK(sf::half_integer_gamma(70, 80) > 0.0);
  sf::HalfIntegerGammaTable table(10);
  CHECK(table.cap() == 10);
  CHECK_THROWS_AS(table(11), gaussquad::DomainError);
}

TEST_CASE("factorials") {
  CHECK(sf::factorial(0) == 1.0);
  CHECK(sf::factorial(10) == 3628800.0);
  CHECK(std::isfinite(sf::factorial(170)));
  CHECK_THROWS_AS(sf::factorial(171), gaussquad::DomainError);
  CHECK(sf::double_factorial(-1) == 1.0);
  CHECK(sf::double_factorial(7) == 105.0);
  CHECK(sf::double_factorial(8) == 384.0);
}

TEST_CASE("Hermite polynomials") {
  CHECK(sf::hermite_eval(0, 3.7) == 1.0);
  CHECK(sf::hermite_eval(2, 0.0) == -2.0);
  CHECK(sf::hermite_eval(3, 1.0) == -4.0);
  // Hermite numbers (-1)^(m/2) 2^(m/2) (m-1)!!
  for (int m = 0; m <= 20; m += 2) {
    const double number = ((m / 2) % 2 ? -1.0 : 1.0) * std::ldexp(sf::double_factorial(m - 1), m / 2);
    CHECK(sf::hermite_eval(m, 0.0) == number);
  }
  CHECK(std::isinf(sf::hermite_eval(256, 1e30)));
  CHECK_THROWS_AS(sf::hermite_eval(257, 0.1), gaussquad::DomainError);
}

TEST_CASE("Hermite recurrence matches the explicit sum") {
  Gen gen(13);
  for (int m = 0; m <= 30; ++m) {
    for (double t : gen.uniforms(100, -5.0, 5.0)) {
      // H_m(t) = m! sum_k (-1)^k (2t)^(m-2k) / (k! (m-2k)!)
      double sum = 0.0;
      double scale = 0.0;
      for (int k = 0; 2 * k <= m; ++k) {
        const double term = (k % 2 ? -1.0 : 1.0) * sf::factorial(m) * std::pow(2.0 * t, m - 2 * k) /
                            (sf::factorial(k) * sf::factorial(m - 2 * k));
        sum += term;
        scale += std::fabs(term);
      }
      // Relative to the term magnitudes: near a root the value itself is
      // tiny and the explicit sum is the inaccurate side.
      INFO("m = " << m << ", t = " << t);
      CHECK(std::fabs(sf::hermite_eval(m, t) - sum) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("Gaussian derivatives") {
  CHECK(sf::gaussian_derivative(0, 50.0, 0.02) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(sf::gaussian_derivative(1, 2.0, 0.5) == doctest::Approx(-4.0 * std::exp(-1.0)).epsilon(1e-15));
  for (int m = 0; m <= 20; m += 2) {
    const double alpha = 3.0;
    CHECK(sf::gaussian_derivative(m, alpha, 0.0) ==
          doctest::Approx(std::pow(alpha, m) * sf::hermite_eval(m, 0.0)).epsilon(1e-13));
  }
  // Against the unscaled product where it is representable.
  for (int m : {3, 7, 15}) {
    for (double x : {-0.03, 0.011, 0.05}) {
      const double direct = (m % 2 ? -1.0 : 1.0) * std::pow(50.0, m) * sf::hermite_eval(m, 50.0 * x) *
                            std::exp(-2500.0 * x * x);
      CHECK(sf::gaussian_derivative(m, 50.0, x) == doctest::Approx(direct).epsilon(1e-12));
    }
  }
  // m = 50 at alpha = 50 peaks near 1e100 and stays finite.
  CHECK(std::isfinite(sf::gaussian_derivative(50, 50.0, 0.0)));
  CHECK(std::isfinite(sf::gaussian_derivative(50, 50.0, 0.1)));
}
