#pragma once

#include <cmath>

namespace egg::detail {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      carry_ += (sum_ - t) + term;
    } else {
      carry_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace egg::detail
