#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gaussquad/format.hpp"

namespace gaussquad {

/// One line of a reproduced error table.
struct BenchRow {
  std::string scheme;  // quadp, quade or simpson
  double alpha = 0.0;
  double c0 = 0.0;
  int n = 0;
  /// Degree, or the per-interval degrees joined by ';' for quade.
  std::string m;
  double re = 0.0;
  double abs_error = 0.0;
  double order = 0.0;
  std::size_t nodes = 0;
};

/// -ln(abs_error) / ln(base) with base 2 alpha for quade and alpha otherwise.
/// +inf for a zero error.
double convergence_order(const std::string& scheme, double alpha, double abs_error);

std::vector<int> table_ids();
std::string table_caption(int table_id);

/// Rows for one of the tables 1..6, in grid-file order (alpha, then scheme
/// group, then n). Throws DomainError for an unknown id.
std::vector<BenchRow> run_table(int table_id);

/// Columns scheme,alpha,c0,n,m,re,abs_error,order,nodes.
TextTable bench_table(const std::vector<BenchRow>& rows);

/// One comparison of the `check` suite.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double limit = 0.0;
  bool pass = false;
};

/// Library results against the adaptive oracle and the closed-form
/// references. `tol` is the oracle tolerance. Throws OracleError when the
/// oracle itself fails.
std::vector<CheckResult> run_oracle_checks(double tol);

}  // namespace gaussquad
