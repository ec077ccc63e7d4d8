// gaussquad: tables, figure data and one-shot integrals for Gaussian-weighted
// quadrature on graded meshes.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gaussquad/bench.hpp"
#include "gaussquad/error.hpp"
#include "gaussquad/figures.hpp"
#include "gaussquad/format.hpp"
#include "gaussquad/graded.hpp"
#include "gaussquad/integrand.hpp"
#include "gaussquad/moments.hpp"
#include "gaussquad/oracle.hpp"

namespace gq = gaussquad;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegrateArgs {
  std::string scheme = "quadp";
  std::string inner = "quadp";
  std::string f = "x2";
  double alpha = 0.0;
  double beta = 0.0;
  int n = 10;
  int m = 4;
  bool check = false;
};

void add_field(gq::TextTable& t, const std::string& key, const std::string& value) {
  t.rows.push_back({key, value});
}

gq::TextTable integrate_command(const IntegrateArgs& a, double tol) {
  const gq::Integrand f = *gq::builtin_integrand(a.f);
  gq::TextTable t;
  t.columns = {"field", "value"};
  add_field(t, "scheme", a.scheme);
  add_field(t, "integrand", a.f);
  add_field(t, "alpha", gq::format_real(a.alpha));
  add_field(t, "beta", gq::format_real(a.beta));

  double value = 0.0;
  std::size_t nodes = 0;
  std::string degrees;
  if (a.scheme == "shifted") {
    const gq::SchemeChoice choice{a.inner == "quade" ? gq::Scheme::QuadE : gq::Scheme::QuadP, a.n, a.m};
    const auto r = gq::integrate_shifted(f, a.alpha, a.beta, choice);
    value = r.value;
    nodes = r.left.node_count + r.right.node_count;
    for (const auto* part : {&r.left, &r.right}) {
      for (const auto& adv : part->advisories) add_field(t, "advisory", adv);
    }
  } else {
    if (a.scheme != "basic" && a.beta != 0.0) {
      throw UsageError("--beta is only used by --scheme basic and --scheme shifted");
    }
    gq::QuadratureReport r;
    if (a.scheme == "quadp") {
      r = gq::quadp(f, a.alpha, a.n, a.m);
    } else if (a.scheme == "quade") {
      r = gq::quade(f, a.alpha, a.n);
    } else {
      r = gq::integrate_affine(f, a.alpha, a.beta, a.m);
    }
    value = r.value;
    nodes = r.node_count;
    for (std::size_t i = 0; i < r.degrees.size(); ++i) degrees += (i ? ";" : "") + std::to_string(r.degrees[i]);
    add_field(t, "n", gq::format_int(r.n));
    add_field(t, "m", degrees);
    for (const auto& adv : r.advisories) add_field(t, "advisory", adv);
  }
  add_field(t, "value", gq::format_real(value));
  add_field(t, "nodes", gq::format_int(static_cast<std::int64_t>(nodes)));

  if (a.beta == 0.0) {
    if (const auto exact = gq::reference_integral(a.f, a.alpha)) {
      const double err = std::fabs(value - *exact);
      add_field(t, "exact", gq::format_real(*exact));
      add_field(t, "re", gq::format_real(err / std::fabs(*exact)));
      add_field(t, "abs_error", gq::format_real(err));
      if (a.alpha > 1.0) add_field(t, "order", gq::format_real(gq::convergence_order(a.scheme, a.alpha, err)));
    }
  }
  if (a.check) {
    const double ref = gq::adaptive_oracle(f, gq::GaussianWeight(a.alpha, a.beta), tol, 0.0, 1.0);
    add_field(t, "oracle", gq::format_real(ref));
    add_field(t, "oracle_abs_diff", gq::format_real(std::fabs(value - ref)));
  }
  return t;
}

gq::TextTable moments_command(double alpha, double beta, int kmax) {
  const auto w = gq::moments_any_beta(gq::GaussianWeight(alpha, beta), kmax);
  gq::TextTable t;
  t.columns = {"k", "w"};
  for (int k = 0; k <= kmax; ++k) t.rows.push_back({gq::format_int(k), gq::format_real(w[k])});
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian-weighted quadrature on graded meshes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string out_path;
  double tol = gq::kOracleMinTolerance;
  std::optional<long long> seed;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "md"}));
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");
  app.add_option("--tol", tol, "Adaptive oracle tolerance (>= 1e-14)");
  app.add_option("--seed", seed, "Reserved; every command is deterministic");

  IntegrateArgs iargs;
  auto* integrate = app.add_subcommand("integrate", "Integrate a built-in f against exp(-alpha^2 (x-beta)^2) on [0,1]");
  integrate->add_option("--scheme", iargs.scheme)->check(CLI::IsMember({"quadp", "quade", "basic", "shifted"}));
  integrate->add_option("--inner", iargs.inner, "Scheme for the halves of --scheme shifted")
      ->check(CLI::IsMember({"quadp", "quade"}));
  integrate->add_option("--alpha", iargs.alpha)->required();
  integrate->add_option("--beta", iargs.beta);
  integrate->add_option("--n", iargs.n);
  integrate->add_option("--m", iargs.m);
  integrate->add_option("--f", iargs.f)->check(CLI::IsMember(gq::builtin_integrand_labels()));
  integrate->add_flag("--check", iargs.check, "Compare with the adaptive oracle");

  int table_id = 0;
  auto* table = app.add_subcommand("table", "Reproduce an error table");
  table->add_option("id", table_id)->required()->check(CLI::IsMember(gq::table_ids()));

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "Emit plot data for a figure");
  figure->add_option("id", figure_id)->required()->check(CLI::IsMember(gq::figure_ids()));

  double m_alpha = 0.0;
  double m_beta = 0.0;
  int kmax = 0;
  auto* moments = app.add_subcommand("moments", "Print w_k, the integral over [-1,1] of x^k exp(-alpha^2 (x-beta)^2)");
  moments->add_option("--alpha", m_alpha)->required();
  moments->add_option("--beta", m_beta)->required();
  moments->add_option("--kmax", kmax)->required();

  auto* check = app.add_subcommand("check", "Run the oracle validation suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (seed) throw UsageError("--seed is reserved: all commands are deterministic");
    const auto fmt = format == "md" ? gq::OutputFormat::Markdown : gq::OutputFormat::Csv;
    gq::TextTable result;
    bool failed = false;
    if (*integrate) {
      result = integrate_command(iargs, tol);
    } else if (*table) {
      result = gq::bench_table(gq::run_table(table_id));
      result.notes.push_back("table " + std::to_string(table_id) + ": " + gq::table_caption(table_id));
    } else if (*figure) {
      result = gq::emit_figure_data(figure_id);
    } else if (*moments) {
      result = moments_command(m_alpha, m_beta, kmax);
    } else if (*check) {
      result.columns = {"check", "value", "reference", "limit", "status"};
      for (const auto& c : gq::run_oracle_checks(tol)) {
        result.rows.push_back({c.name, gq::format_real(c.value), gq::format_real(c.reference),
                               gq::format_real(c.limit), c.pass ? "pass" : "FAIL"});
        failed = failed || !c.pass;
      }
    }

    std::ostringstream buffer;
    gq::write_table(buffer, result, fmt);
    if (out_path.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
      file << buffer.str();
    }
    if (failed) {
      std::cerr << "gaussquad: some checks failed\n";
      return kExitDomain;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "gaussquad: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gq::DomainError& e) {
    std::cerr << "gaussquad: " << e.what() << '\n';
    return kExitDomain;
  } catch (const gq::OracleError& e) {
    std::cerr << "gaussquad: " << e.what() << '\n';
    return kExitDomain;
  } catch (const gq::EvaluationError& e) {
    std::cerr << "gaussquad: " << e.what() << '\n';
    return kExitDomain;
  }
}
