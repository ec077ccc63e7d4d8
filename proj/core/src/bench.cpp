#include "gaussquad/bench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gaussquad/baseline.hpp"
#include "gaussquad/cheb_rule.hpp"
#include "gaussquad/error.hpp"
#include "gaussquad/graded.hpp"
#include "gaussquad/integrand.hpp"
#include "gaussquad/oracle.hpp"
#include "gaussquad/specfun.hpp"
#include "grids.hpp"

namespace gaussquad {
namespace {

const nlohmann::json& table_spec(int table_id) {
  const auto& tables = detail::grids().at("tables");
  const auto it = tables.find(std::to_string(table_id));
  if (it == tables.end()) throw DomainError("unknown table id " + std::to_string(table_id));
  return *it;
}

std::string join_degrees(const std::vector<int>& degrees) {
  std::string out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(degrees[i]);
  }
  return out;
}

BenchRow make_row(const std::string& scheme, double alpha, int n, std::string m, double value,
                  double exact, std::size_t nodes) {
  BenchRow row;
  row.scheme = scheme;
  row.alpha = alpha;
  row.c0 = 1.0 / (std::sqrt(2.0) * alpha);
  row.n = n;
  row.m = std::move(m);
  row.abs_error = std::fabs(value - exact);
  row.re = row.abs_error / std::fabs(exact);
  row.order = convergence_order(scheme, alpha, row.abs_error);
  row.nodes = nodes;
  return row;
}

CheckResult compare(std::string name, double value, double reference, double limit) {
  return CheckResult{std::move(name), value, reference, limit,
                     std::fabs(value - reference) <= limit};
}

}  // namespace

double convergence_order(const std::string& scheme, double alpha, double abs_error) {
  if (abs_error == 0.0) return std::numeric_limits<double>::infinity();
  const double base = scheme == "quade" ? 2.0 * alpha : alpha;
  return -std::log(abs_error) / std::log(base);
}

std::vector<int> table_ids() {
  std::vector<int> ids;
  for (const auto& [key, value] : detail::grids().at("tables").items()) ids.push_back(std::stoi(key));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string table_caption(int table_id) {
  return table_spec(table_id).at("caption").get<std::string>();
}

std::vector<BenchRow> run_table(int table_id) {
  const auto& spec = table_spec(table_id);
  const auto label = spec.at("integrand").get<std::string>();
  const Integrand f = *builtin_integrand(label);
  std::vector<BenchRow> rows;
  for (const double alpha : spec.at("alphas").get<std::vector<double>>()) {
    const double exact = *reference_integral(label, alpha);
    for (const auto& group : spec.at("groups")) {
      const auto scheme = group.at("scheme").get<std::string>();
      for (const int n : group.at("ns").get<std::vector<int>>()) {
        if (scheme == "simpson") {
          const double v = composite_simpson(weighted_integrand(f, GaussianWeight(alpha)), n);
          rows.push_back(make_row(scheme, alpha, n, "2", v, exact, 2 * static_cast<std::size_t>(n) + 1));
        } else if (scheme == "quadp") {
          const int m = group.at("m").get<int>();
          const auto r = quadp(f, alpha, n, m);
          rows.push_back(make_row(scheme, alpha, n, std::to_string(m), r.value, exact, r.node_count));
        } else if (scheme == "quade") {
          const auto r = quade(f, alpha, n);
          rows.push_back(make_row(scheme, alpha, n, join_degrees(r.degrees), r.value, exact,
                                  r.node_count));
        } else {
          throw DomainError("grid file names an unknown scheme '" + scheme + "'");
        }
      }
    }
  }
  return rows;
}

TextTable bench_table(const std::vector<BenchRow>& rows) {
  TextTable t;
  t.columns = {"scheme", "alpha", "c0", "n", "m", "re", "abs_error", "order", "nodes"};
  for (const auto& r : rows) {
    t.rows.push_back({r.scheme, format_real(r.alpha), format_real(r.c0), format_int(r.n), r.m,
                      format_real(r.re), format_real(r.abs_error), format_real(r.order),
                      format_int(static_cast<std::int64_t>(r.nodes))});
  }
  return t;
}

std::vector<CheckResult> run_oracle_checks(double tol) {
  std::vector<CheckResult> out;
  const double slack = std::max(100.0 * tol, 1e-13);

  for (const auto& [alpha, beta] : {std::pair{2.0, -1.5}, std::pair{3.0, 0.4}, std::pair{10.0, 0.0}}) {
    const GaussianWeight w(alpha, beta);
    const auto moments = moments_any_beta(w, 8);
    for (int k = 0; k <= 8; ++k) {
      const auto xk = make_integrand([k](double x) { return std::pow(x, k); });
      out.push_back(compare("moment alpha=" + format_real(alpha) + " beta=" + format_real(beta) +
                                " k=" + std::to_string(k),
                            moments[k], adaptive_oracle(xk, w, tol),
                            slack * specfun::kSqrtPi / alpha));
    }
  }

  {
    // The rule integrates its interpolant exactly, so compare with the
    // oracle applied to the interpolant.
    const GaussianWeight w(5.0, -1.0);
    const Integrand f = expx2_integrand();
    const auto c = chebyshev_coefficients(f, 8);
    const auto p = make_integrand([&c](double x) { return chebyshev_series(c, x); });
    const double ref = adaptive_oracle(p, w, tol);
    out.push_back(compare("basic expx2 m=8 alpha=5 beta=-1", basic_rule(f, 8, w), ref,
                          slack * std::fabs(ref)));
  }

  {
    const double ref = adaptive_oracle(expx2_integrand(), GaussianWeight(50.0), tol, 0.0, 1.0);
    // n = 4 resolves about ten digits at this alpha.
    out.push_back(compare("quade expx2 alpha=50 n=4", quade(expx2_integrand(), 50.0, 4).value, ref,
                          std::max(1e-9, slack) * std::fabs(ref)));
  }

  {
    const auto f = make_integrand([](double x) { return x; }, "x");
    const double ref = adaptive_oracle(f, GaussianWeight(50.0, 0.5), tol, 0.0, 1.0);
    const auto r = integrate_shifted(f, 50.0, 0.5, SchemeChoice{Scheme::QuadP, 10, 4});
    out.push_back(compare("shifted x alpha=50 beta=0.5", r.value, ref,
                          std::max(1e-12, slack) * std::fabs(ref)));
  }

  for (const auto& [id, limit] : {std::pair{1, 5e-12}, std::pair{5, 1e-12}, std::pair{6, 1e-12}}) {
    double worst = 0.0;
    for (const auto& row : run_table(id)) worst = std::max(worst, row.re);
    out.push_back(compare("table " + std::to_string(id) + " worst relative error", worst, 0.0, limit));
  }
  return out;
}

}  // namespace gaussquad
