#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "gaussquad/bench.hpp"
#include "gaussquad/error.hpp"
#include "gaussquad/figures.hpp"
#include "gaussquad/format.hpp"
#include "gaussquad/integrand.hpp"
#include "gaussquad/specfun.hpp"

using namespace gaussquad;

namespace {

std::string csv(const TextTable& t) {
  std::ostringstream os;
  write_table(os, t, OutputFormat::Csv);
  return os.str();
}

const BenchRow& find_row(const std::vector<BenchRow>& rows, const std::string& scheme, double alpha, int n) {
  for (const auto& r : rows) {
    if (r.scheme == scheme && r.alpha == alpha && r.n == n) return r;
  }
  throw std::runtime_error("row not found");
}

}  // namespace

TEST_CASE("reference integrals") {
  for (double alpha : {2.0, 10.0, 300.0}) {
    for (const auto& label : builtin_integrand_labels()) CHECK(*reference_integral(label, alpha) > 0.0);
  }
  CHECK(*reference_integral("const1", 10.0) == doctest::Approx(specfun::kSqrtPi / 20.0).epsilon(1e-15));
  CHECK_FALSE(reference_integral("nope", 10.0).has_value());
  CHECK_FALSE(builtin_integrand("nope").has_value());
}

TEST_CASE("table grids") {
  CHECK(table_ids() == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(run_table(7), DomainError);
  CHECK(run_table(1).size() == 21);
  CHECK(run_table(2).size() == 18);
  CHECK(run_table(3).size() == 18);
  CHECK(run_table(4).size() == 12);
  CHECK(run_table(5).size() == 15);
  CHECK(run_table(6).size() == 15);
}

TEST_CASE("table rows") {
  const auto t1 = run_table(1);
  const auto& r = find_row(t1, "quadp", 10.0, 5);
  CHECK(r.re <= 5e-12);
  CHECK(r.order >= 10.0);
  CHECK(r.m == "4");
  CHECK(r.nodes == 25);

  const auto& r5 = find_row(run_table(5), "quadp", 100.0, 4);
  CHECK(r5.re <= 1e-12);
  CHECK(r5.order >= 4.0);
  CHECK(find_row(run_table(6), "quade", 2000.0, 3).re <= 1e-12);
  CHECK(find_row(run_table(3), "quade", 20.0, 3).m == "2;3;6");
}

TEST_CASE("order column follows abs_error") {
  for (int id : table_ids()) {
    for (const auto& r : run_table(id)) {
      if (r.abs_error == 0.0) {
        CHECK(std::isinf(r.order));
        continue;
      }
      const double base = r.scheme == "quade" ? 2.0 * r.alpha : r.alpha;
      CHECK(std::fabs(r.order - (-std::log(r.abs_error) / std::log(base))) <= 1e-12 * std::fabs(r.order));
      CHECK(r.c0 * r.alpha * std::sqrt(2.0) == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  CHECK(std::isinf(convergence_order("quadp", 10.0, 0.0)));
}

TEST_CASE("c0 matches the printed three digits") {
  const std::vector<std::pair<double, double>> printed = {
      {10, 7.07e-2}, {50, 1.41e-2}, {100, 7.07e-3}, {500, 1.41e-3}, {1000, 7.07e-4}, {5000, 1.41e-4}, {10000, 7.07e-5}};
  const auto rows = run_table(1);
  for (const auto& [alpha, c0] : printed) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2e", find_row(rows, "quadp", alpha, 5).c0);
    CHECK(std::stod(buf) == c0);
  }
}

TEST_CASE("tables are deterministic") {
  for (int id : table_ids()) CHECK(csv(bench_table(run_table(id))) == csv(bench_table(run_table(id))));
}

TEST_CASE("bench CSV layout") {
  const auto text = csv(bench_table(run_table(2)));
  CHECK(text.rfind("scheme,alpha,c0,n,m,re,abs_error,order,nodes\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find("simpson,2.0000000000000000e+01,") != std::string::npos);
}

TEST_CASE("oracle check suite passes") {
  for (const auto& c : run_oracle_checks(1e-14)) {
    INFO(c.name << ": " << c.value << " vs " << c.reference << " limit " << c.limit);
    CHECK(c.pass);
  }
}

TEST_CASE("figure data") {
  CHECK(figure_ids().size() == 7);
  CHECK_THROWS_AS(emit_figure_data("7"), DomainError);

  const auto f1 = emit_figure_data("1");
  CHECK(f1.columns == std::vector<std::string>{"panel", "m", "x", "value"});
  CHECK(f1.rows.size() == 2 * 2001);
  bool found = false;
  for (const auto& row : f1.rows) {
    if (row[0] == "A" && row[2] == format_real(0.0)) {
      CHECK(row[3] == format_real(1.0));
      found = true;
    }
  }
  CHECK(found);

  const auto f4 = emit_figure_data("4");
  for (const auto& row : f4.rows) {
    if (row[1] == "100" && row[2] == format_real(1000.0)) CHECK(std::stod(row[3]) > 1e-3);
  }

  const auto f62 = emit_figure_data("6.2");
  CHECK(f62.notes.size() == 2);
  double lo = INFINITY, hi = 0.0;
  int count = 0;
  for (const auto& row : f62.rows) {
    if (row[0] != "B") continue;
    const double scaled = std::stod(row[5]);
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
    ++count;
  }
  CHECK(count == 51);
  CHECK(lo > 0.0);
  CHECK(hi / lo <= 100.0);
}

TEST_CASE("number formatting") {
  CHECK(format_real(0.1) == "1.0000000000000001e-01");
  CHECK(format_real(-2.5) == "-2.5000000000000000e+00");
  CHECK(format_real(INFINITY) == "inf");
  CHECK(format_real(NAN) == "nan");
  CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_int(-42) == "-42");
}

TEST_CASE("markdown layout") {
  TextTable t;
  t.notes = {"note"};
  t.columns = {"a", "bbbb"};
  t.rows = {{"xx", "y"}};
  std::ostringstream os;
  write_table(os, t, OutputFormat::Markdown);
  CHECK(os.str() == "note\n\n| a   | bbbb |\n|-----|------|\n| xx  | y    |\n");
  std::ostringstream cs;
  write_table(cs, t, OutputFormat::Csv);
  CHECK(cs.str() == "# note\na,bbbb\nxx,y\n");
}
