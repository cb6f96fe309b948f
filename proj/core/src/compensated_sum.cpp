#include "gibbs/compensated_sum.hpp"

#include <cmath>

namespace gibbs {

void CompensatedSum::add(double value) noexcept {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    compensation_ += (sum_ - t) + value;
  } else {
    compensation_ += (value - t) + sum_;
  }
  sum_ = t;
}

}  // namespace gibbs
