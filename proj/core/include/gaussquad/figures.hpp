#pragma once

#include <string>
#include <vector>

#include "gaussquad/format.hpp"

namespace gaussquad {

/// "1", "2", "3", "4", "5", "6.1", "6.2".
std::vector<std::string> figure_ids();

/// Plot data for a figure. Throws DomainError for an unknown id.
///   1-3:  panel,m,x,value           Gaussian derivatives at alpha = 50
///   4:    panel,n,alpha,abs_error   trapezoid on exp(-alpha^2 x^2), fixed n
///   5:    panel,alpha,n,abs_error   same, fixed alpha
///   6.1:  panel,alpha,n,re,abs_error                QuadP, f = x^2
///   6.2:  panel,alpha,n,re,abs_error,scaled_error   QuadE, f = exp(-x^2)
TextTable emit_figure_data(const std::string& figure_id);

}  // namespace gaussquad
