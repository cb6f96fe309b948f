#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gibbs/filters.hpp"
#include "gibbs/singularities.hpp"

namespace gibbs {

using Complex = std::complex<double>;
using CoefficientFn = std::function<Complex(long)>;
using ExactFn = std::function<Complex(double)>;

/// Two-sided 2*pi-periodic Fourier series f(x) = sum_n c_n exp(i n x),
/// with coefficients supplied by a generator for |n| <= n_max.
///
/// A general period P reduces to this one by the dilation x = 2*pi*y/P.
class FourierSeries {
 public:
  /// Validates |c_n| <= coeff_bound for all |n| <= n_max and, when
  /// `real_valued` is set, c_{-n} == conj(c_n).
  FourierSeries(CoefficientFn coeff, long n_max, double coeff_bound, bool real_valued = false);

  /// Series backed by an explicit table, indexed from -n_max to n_max.
  static FourierSeries from_table(std::vector<Complex> two_sided, double coeff_bound,
                                  bool real_valued = false);

  FourierSeries with_exact(ExactFn exact) &&;
  FourierSeries with_singularities(SingularitySet set) &&;

  Complex coeff(long n) const;
  long n_max() const noexcept { return n_max_; }
  double coeff_bound() const noexcept { return coeff_bound_; }
  bool real_valued() const noexcept { return real_valued_; }

  bool has_exact() const noexcept { return static_cast<bool>(exact_); }
  /// Closed-form f(x); throws UnsupportedError when none was attached.
  Complex exact(double x) const;

  const std::optional<SingularitySet>& singularities() const noexcept { return singularities_; }
  /// Periodic distance to the declared real singularity (pi when none).
  double singularity_distance(double x) const noexcept;

  /// sum_{|n| <= N} |c_n|.
  double magnitude_sum(int N) const;

 private:
  CoefficientFn coeff_;
  long n_max_;
  double coeff_bound_;
  bool real_valued_;
  ExactFn exact_;
  std::optional<SingularitySet> singularities_;
};

/// sum_{n=-N}^{N} c_n exp(i n x), compensated.
Complex partial_sum(const FourierSeries& series, double x, int N);

/// sum_{n=-N}^{N} w[|n|] c_n exp(i n x); `weights` has N+1 entries.
Complex weighted_partial_sum(const FourierSeries& series, double x, int N,
                             std::span<const double> weights);

/// Filtered sum; adaptive filters see the distance from x to the real singularity.
Complex filtered_partial_sum(const FourierSeries& series, double x, int N,
                             const FilterSpec& filter);

/// |f(x) - f_N^sigma(x)| against the closed form.
double pointwise_error(const FourierSeries& series, double x, int N, const FilterSpec& filter);

}  // namespace gibbs
