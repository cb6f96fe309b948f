#include "gibbs/fourier_series.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <utility>

#include "gibbs/compensated_sum.hpp"
#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

void check_truncation(const FourierSeries& series, int N) {
  if (N < 0) throw ArgumentError("truncation degree must be >= 0");
  if (N > series.n_max()) {
    throw RangeError("truncation N=" + std::to_string(N) + " exceeds n_max=" +
                     std::to_string(series.n_max()));
  }
}

}  // namespace

FourierSeries::FourierSeries(CoefficientFn coeff, long n_max, double coeff_bound, bool real_valued)
    : coeff_(std::move(coeff)),
      n_max_(n_max),
      coeff_bound_(coeff_bound),
      real_valued_(real_valued) {
  if (!coeff_) throw ArgumentError("FourierSeries needs a coefficient generator");
  if (n_max_ < 0) throw ArgumentError("n_max must be >= 0");
  if (!(coeff_bound_ > 0.0) || !std::isfinite(coeff_bound_)) {
    throw ArgumentError("coefficient bound must be positive and finite");
  }
  for (long n = -n_max_; n <= n_max_; ++n) {
    const Complex c = coeff_(n);
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || std::abs(c) > coeff_bound_) {
      throw ArgumentError("coefficient c_" + std::to_string(n) + " violates the declared bound");
    }
  }
  if (real_valued_) {
    for (long n = 1; n <= n_max_; ++n) {
      const Complex a = coeff_(n);
      const Complex b = std::conj(coeff_(-n));
      // A few ulps of slack for tables built by arithmetic.
      if (std::abs(a - b) > 4.0 * std::numeric_limits<double>::epsilon() * std::abs(a)) {
        throw ArgumentError("real-valued series requires c_{-n} = conj(c_n); fails at n=" +
                            std::to_string(n));
      }
    }
  }
}

FourierSeries FourierSeries::from_table(std::vector<Complex> two_sided, double coeff_bound,
                                        bool real_valued) {
  if (two_sided.size() % 2 != 1) throw ArgumentError("two-sided table needs odd length");
  const long n_max = static_cast<long>(two_sided.size() / 2);
  auto table = std::make_shared<const std::vector<Complex>>(std::move(two_sided));
  return FourierSeries([table, n_max](long n) { return (*table)[n + n_max]; }, n_max,
                       coeff_bound, real_valued);
}

FourierSeries FourierSeries::with_exact(ExactFn exact) && {
  exact_ = std::move(exact);
  return std::move(*this);
}

FourierSeries FourierSeries::with_singularities(SingularitySet set) && {
  singularities_ = std::move(set);
  return std::move(*this);
}

Complex FourierSeries::coeff(long n) const {
  if (n > n_max_ || n < -n_max_) {
    throw RangeError("coefficient index " + std::to_string(n) + " outside [-" +
                     std::to_string(n_max_) + ", " + std::to_string(n_max_) + "]");
  }
  return coeff_(n);
}

Complex FourierSeries::exact(double x) const {
  if (!exact_) throw UnsupportedError("series has no closed-form evaluator");
  return exact_(x);
}

double FourierSeries::singularity_distance(double x) const noexcept {
  return singularities_ ? singularities_->distance(x) : SingularitySet{}.distance(x);
}

double FourierSeries::magnitude_sum(int N) const {
  check_truncation(*this, N);
  CompensatedSum sum;
  for (long n = -N; n <= N; ++n) sum.add(std::abs(coeff_(n)));
  return sum.value();
}

Complex weighted_partial_sum(const FourierSeries& series, double x, int N,
                             std::span<const double> weights) {
  check_truncation(series, N);
  if (weights.size() != static_cast<std::size_t>(N) + 1) {
    throw ArgumentError("weight vector must have N+1 entries");
  }
  CompensatedComplexSum sum;
  for (long n = -N; n <= N; ++n) {
    const double w = weights[static_cast<std::size_t>(std::abs(n))];
    if (w == 0.0) continue;
    sum.add(w * series.coeff(n) * std::polar(1.0, static_cast<double>(n) * x));
  }
  return sum.value();
}

Complex partial_sum(const FourierSeries& series, double x, int N) {
  check_truncation(series, N);
  return weighted_partial_sum(series, x, N, std::vector<double>(static_cast<std::size_t>(N) + 1, 1.0));
}

Complex filtered_partial_sum(const FourierSeries& series, double x, int N,
                             const FilterSpec& filter) {
  check_truncation(series, N);
  const auto w = filter.weights(N, series.singularity_distance(x));
  return weighted_partial_sum(series, x, N, w);
}

double pointwise_error(const FourierSeries& series, double x, int N, const FilterSpec& filter) {
  if (!series.has_exact()) throw UnsupportedError("pointwise_error needs a closed-form evaluator");
  const auto& sing = series.singularities();
  if (sing && sing->has_real() && sing->distance(x) == 0.0) {
    throw DomainError("pointwise_error evaluated at the real singularity");
  }
  return std::abs(series.exact(x) - filtered_partial_sum(series, x, N, filter));
}

}  // namespace gibbs
