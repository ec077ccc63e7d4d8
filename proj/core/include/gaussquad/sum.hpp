#pragma once

#include <cmath>

namespace gaussquad {

/// Neumaier's variant of Kahan summation: the running correction also
/// captures the low part when the new term dominates the partial sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double term) noexcept {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term)) {
      correction_ += (sum_ - t) + term;
    } else {
      correction_ += (term - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const noexcept { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace gaussquad
