#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "gibbs/fourier_series.hpp"

namespace gibbs {

/// Truncated power series sum_{n=0}^{degree} a_n z^n.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Complex> coeffs, std::optional<double> radius_hint = {});

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Complex operator[](std::size_t n) const { return coeffs_[n]; }
  Complex coeff(int n) const;
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }
  const std::optional<double>& radius_hint() const noexcept { return radius_hint_; }

  /// First N+1 coefficients.
  PowerSeries truncated(int N) const;

 private:
  std::vector<Complex> coeffs_;
  std::optional<double> radius_hint_;
};

/// Moebius map z = Z(zeta) = (c-1) zeta / (c - zeta), c > 1. It fixes 0 and 1
/// and sends zeta = c to z = infinity; c = 2 is the classical Euler map
/// z = zeta/(2 - zeta), c = 3 spreads z = -1 and z = infinity to |zeta| = 3.
class ConformalMap {
 public:
  static ConformalMap mobius2() { return ConformalMap(2.0); }
  static ConformalMap mobius(double c);

  double pole() const noexcept { return c_; }

  Complex forward(Complex zeta) const;
  Complex inverse(Complex z) const;

  /// Taylor coefficients of Z at 0: index 0..K-1, i.e. 0, (c-1)/c, (c-1)/c^2, ...
  std::vector<double> series_coeffs(int K) const;

  /// out = (in * Z) truncated to in.size() terms. Uses the rational form:
  /// (c - zeta) out = (c-1) zeta in, so each step is O(1).
  void multiply_truncated(std::span<const Complex> in, std::span<Complex> out) const;

 private:
  explicit ConformalMap(double c) : c_(c) {}
  double c_;
};

/// The Euler map zeta / (2 - zeta).
Complex mobius_forward(Complex zeta);

/// Coefficients b_0..b_N with sum_m b_m zeta^m = sum_n a_n Z(zeta)^n through zeta^N.
PowerSeries recoefficient(const PowerSeries& series, const ConformalMap& map, int N);

/// sum_{m=0}^{N} b_m: the zeta partial sum evaluated at zeta = z = 1.
Complex accelerate_sum(const PowerSeries& series, const ConformalMap& map, int N);

/// |accelerate_sum(mobius2) - sum_n a_n sigma_E(n/(N+1))| with M = N.
double euler_equivalence_check(const PowerSeries& series, int N);

/// One-sided series of the upper half: a_n = c_n exp(i n x), n = 0..N.
PowerSeries upper_half_series(const FourierSeries& series, double x, int N);
/// One-sided series of the lower half: a_0 = 0, a_n = c_{-n} exp(-i n x).
PowerSeries lower_half_series(const FourierSeries& series, double x, int N);

/// Accelerate the two halves separately under `map` and add.
Complex conformal_fourier_sum(const FourierSeries& series, double x, int N,
                              const ConformalMap& map);

/// Abel extension sum_{n>=0} c_n z^n e^{inx} + sum_{n>=1} c_{-n} z^n e^{-inx}.
/// Inside the unit disk the sum stops once the geometric tail bound
/// C |z|^n / (1 - |z|) drops below 1e-15 of the running sum (or at n_max).
/// On |z| = 1 a summability cap is required.
Complex abel_extend_eval(const FourierSeries& series, double x, Complex z,
                         std::optional<long> summability_cap = {});

/// Root-test radius: median of |b_n|^{-1/n} over the last third of the
/// nonzero coefficients (at least 16 needed).
double estimate_radius(const PowerSeries& series);

/// Leading block of coefficients that stay above `relative_floor` times the
/// largest magnitude; drops the rounding-noise plateau before a root test.
PowerSeries resolvable_prefix(const PowerSeries& series, double relative_floor);

}  // namespace gibbs
