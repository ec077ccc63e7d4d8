#include "gaussquad/figures.hpp"

#include <cmath>
#include <string>

#include "gaussquad/baseline.hpp"
#include "gaussquad/error.hpp"
#include "gaussquad/graded.hpp"
#include "gaussquad/integrand.hpp"
#include "gaussquad/specfun.hpp"
#include "grids.hpp"

namespace gaussquad {
namespace {

using nlohmann::json;

// Exact endpoints: the sample at the midpoint index of a symmetric range is 0.
double lerp_sample(double lo, double hi, int i, int count) {
  return (lo * (count - 1 - i) + hi * i) / (count - 1);
}

double log_sample(double lo, double hi, int i, int count) {
  return std::pow(10.0, lerp_sample(std::log10(lo), std::log10(hi), i, count));
}

double gaussian_integral(double alpha) {
  return specfun::kSqrtPi * specfun::erf(alpha) / (2.0 * alpha);
}

double trapezoid_error(double alpha, int n) {
  const double v = composite_trapezoid(weighted_integrand(const1_integrand(), GaussianWeight(alpha)), n);
  return std::fabs(v - gaussian_integral(alpha));
}

TextTable derivative_figure(const json& spec, const std::string& id) {
  const double alpha = spec.at("alpha").get<double>();
  const double lo = spec.at("x_min").get<double>();
  const double hi = spec.at("x_max").get<double>();
  const int samples = spec.at("samples").get<int>();
  TextTable t;
  t.notes.push_back("derivatives of exp(-alpha^2 x^2), alpha = " + format_real(alpha));
  t.columns = {"panel", "m", "x", "value"};
  for (const auto& panel : spec.at("panels").at(id)) {
    const auto name = panel.at(0).get<std::string>();
    const int m = panel.at(1).get<int>();
    for (int i = 0; i < samples; ++i) {
      const double x = lerp_sample(lo, hi, i, samples);
      t.rows.push_back({name, format_int(m), format_real(x),
                        format_real(specfun::gaussian_derivative(m, alpha, x))});
    }
  }
  return t;
}

TextTable trapezoid_fixed_n(const json& spec) {
  const double lo = spec.at("alpha_min").get<double>();
  const double hi = spec.at("alpha_max").get<double>();
  const int points = spec.at("points").get<int>();
  TextTable t;
  t.notes.push_back("composite trapezoid on exp(-alpha^2 x^2) over [0,1], n equal subintervals");
  t.columns = {"panel", "n", "alpha", "abs_error"};
  for (const auto& panel : spec.at("panels")) {
    const auto name = panel.at(0).get<std::string>();
    const int n = panel.at(1).get<int>();
    for (int i = 0; i < points; ++i) {
      const double alpha = log_sample(lo, hi, i, points);
      t.rows.push_back({name, format_int(n), format_real(alpha), format_real(trapezoid_error(alpha, n))});
    }
  }
  return t;
}

TextTable trapezoid_fixed_alpha(const json& spec) {
  const double lo = spec.at("n_min").get<double>();
  const double hi = spec.at("n_max").get<double>();
  const int points = spec.at("points").get<int>();
  TextTable t;
  t.notes.push_back("composite trapezoid on exp(-alpha^2 x^2) over [0,1], n equal subintervals");
  t.columns = {"panel", "alpha", "n", "abs_error"};
  for (const auto& panel : spec.at("panels")) {
    const auto name = panel.at(0).get<std::string>();
    const double alpha = panel.at(1).get<double>();
    for (int i = 0; i < points; ++i) {
      const int n = static_cast<int>(std::lround(log_sample(lo, hi, i, points)));
      t.rows.push_back({name, format_real(alpha), format_int(n), format_real(trapezoid_error(alpha, n))});
    }
  }
  return t;
}

TextTable quadp_figure(const json& spec) {
  const auto label = spec.at("integrand").get<std::string>();
  const Integrand f = *builtin_integrand(label);
  const int m = spec.at("m").get<int>();
  const double fixed_alpha = spec.at("fixed_alpha").get<double>();
  const int fixed_n = spec.at("fixed_n").get<int>();
  const auto n_range = spec.at("n_range").get<std::vector<int>>();
  const auto a_range = spec.at("alpha_range").get<std::vector<double>>();
  const double a_step = spec.at("alpha_step").get<double>();

  TextTable t;
  t.notes.push_back("QuadP, f = " + label + ", m = " + std::to_string(m) +
                    "; panel A fixes alpha, panel B fixes n");
  t.columns = {"panel", "alpha", "n", "re", "abs_error"};
  auto add = [&](const std::string& panel, double alpha, int n) {
    const double exact = *reference_integral(label, alpha);
    const double err = std::fabs(quadp(f, alpha, n, m).value - exact);
    t.rows.push_back({panel, format_real(alpha), format_int(n), format_real(err / std::fabs(exact)),
                      format_real(err)});
  };
  for (int n = n_range[0]; n <= n_range[1]; ++n) add("A", fixed_alpha, n);
  const int steps = static_cast<int>(std::lround((a_range[1] - a_range[0]) / a_step));
  for (int i = 0; i <= steps; ++i) add("B", a_range[0] + i * a_step, fixed_n);
  return t;
}

TextTable quade_figure(const json& spec) {
  const auto label = spec.at("integrand").get<std::string>();
  const Integrand f = *builtin_integrand(label);
  const double fixed_alpha = spec.at("fixed_alpha").get<double>();
  const auto n_range = spec.at("n_range").get<std::vector<int>>();
  const int n_cap = spec.at("n_cap").get<int>();
  const int scaled_n = spec.at("scaled_n").get<int>();
  const auto a_range = spec.at("alpha_range").get<std::vector<double>>();
  const double a_step = spec.at("alpha_step").get<double>();

  TextTable t;
  t.notes.push_back("QuadE, f = " + label + "; panel A fixes alpha, panel B fixes n = " +
                    std::to_string(scaled_n) + " and scaled_error = (2 alpha)^" +
                    std::to_string(scaled_n + 1) + " * abs_error");
  const int n_last = std::min(n_range[1], n_cap);
  if (n_last < n_range[1]) {
    t.notes.push_back("panel A stops at n = " + std::to_string(n_last) + " instead of " +
                      std::to_string(n_range[1]) +
                      ": larger n needs basic-rule degrees n(n-1) above the power-basis cap " +
                      std::to_string(kDefaultDegreeCap));
  }
  t.columns = {"panel", "alpha", "n", "re", "abs_error", "scaled_error"};
  auto add = [&](const std::string& panel, double alpha, int n) {
    const double exact = *reference_integral(label, alpha);
    const double err = std::fabs(quade(f, alpha, n).value - exact);
    t.rows.push_back({panel, format_real(alpha), format_int(n), format_real(err / std::fabs(exact)),
                      format_real(err), format_real(std::pow(2.0 * alpha, n + 1) * err)});
  };
  for (int n = n_range[0]; n <= n_last; ++n) add("A", fixed_alpha, n);
  const int steps = static_cast<int>(std::lround((a_range[1] - a_range[0]) / a_step));
  for (int i = 0; i <= steps; ++i) add("B", a_range[0] + i * a_step, scaled_n);
  return t;
}

}  // namespace

std::vector<std::string> figure_ids() { return {"1", "2", "3", "4", "5", "6.1", "6.2"}; }

TextTable emit_figure_data(const std::string& figure_id) {
  const auto& figs = detail::grids().at("figures");
  if (figure_id == "1" || figure_id == "2" || figure_id == "3") {
    return derivative_figure(figs.at("derivatives"), figure_id);
  }
  if (figure_id == "4") return trapezoid_fixed_n(figs.at("4"));
  if (figure_id == "5") return trapezoid_fixed_alpha(figs.at("5"));
  if (figure_id == "6.1") return quadp_figure(figs.at("6.1"));
  if (figure_id == "6.2") return quade_figure(figs.at("6.2"));
  throw DomainError("unknown figure id '" + figure_id + "'");
}

}  // namespace gaussquad
