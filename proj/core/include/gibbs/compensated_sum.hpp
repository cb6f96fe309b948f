#pragma once

#include <complex>

namespace gibbs {

/// Neumaier's variant of Kahan summation. The running compensation
/// captures the low-order bits lost by each addition, so the result is
/// accurate to about one rounding of the exact sum regardless of ordering.
class CompensatedSum {
 public:
  void add(double value) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> value) noexcept {
    re_.add(value.real());
    im_.add(value.imag());
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace gibbs
