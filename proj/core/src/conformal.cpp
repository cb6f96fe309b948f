#include "gibbs/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gibbs/compensated_sum.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/filters.hpp"

namespace gibbs {

PowerSeries::PowerSeries(std::vector<Complex> coeffs, std::optional<double> radius_hint)
    : coeffs_(std::move(coeffs)), radius_hint_(radius_hint) {
  if (coeffs_.empty()) throw ArgumentError("power series needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ArgumentError("power series coefficients must be finite");
    }
  }
  if (radius_hint_ && !(*radius_hint_ > 0.0)) throw ArgumentError("radius hint must be positive");
}

Complex PowerSeries::coeff(int n) const {
  if (n < 0 || n > degree()) throw RangeError("power series index " + std::to_string(n) + " out of range");
  return coeffs_[static_cast<std::size_t>(n)];
}

PowerSeries PowerSeries::truncated(int N) const {
  if (N < 0 || N > degree()) throw RangeError("cannot truncate to degree " + std::to_string(N));
  return PowerSeries({coeffs_.begin(), coeffs_.begin() + N + 1}, radius_hint_);
}

ConformalMap ConformalMap::mobius(double c) {
  if (!(c > 1.0) || !std::isfinite(c)) throw ArgumentError("Moebius map needs a pole c > 1");
  return ConformalMap(c);
}

Complex ConformalMap::forward(Complex zeta) const {
  if (zeta == Complex(c_, 0.0)) throw PoleError("zeta at the map pole");
  return (c_ - 1.0) * zeta / (c_ - zeta);
}

Complex ConformalMap::inverse(Complex z) const {
  const Complex den = c_ - 1.0 + z;
  if (den == Complex(0.0, 0.0)) throw PoleError("z at the image of zeta = infinity");
  return c_ * z / den;
}

std::vector<double> ConformalMap::series_coeffs(int K) const {
  if (K < 0) throw ArgumentError("series_coeffs: K must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(K), 0.0);
  double power = 1.0;
  for (int k = 1; k < K; ++k) {
    power /= c_;
    out[k] = (c_ - 1.0) * power;
  }
  return out;
}

void ConformalMap::multiply_truncated(std::span<const Complex> in, std::span<Complex> out) const {
  if (out.size() != in.size()) throw ArgumentError("multiply_truncated: size mismatch");
  if (out.empty()) return;
  // c out_m - out_{m-1} = (c-1) in_{m-1}
  Complex prev(0.0, 0.0);
  out[0] = Complex(0.0, 0.0);
  for (std::size_t m = 1; m < in.size(); ++m) {
    prev = (prev + (c_ - 1.0) * in[m - 1]) / c_;
    out[m] = prev;
  }
}

Complex mobius_forward(Complex zeta) { return ConformalMap::mobius2().forward(zeta); }

PowerSeries recoefficient(const PowerSeries& series, const ConformalMap& map, int N) {
  if (N < 0 || N > series.degree()) {
    throw RangeError("recoefficient: N=" + std::to_string(N) + " beyond series degree");
  }
  const auto size = static_cast<std::size_t>(N) + 1;
  std::vector<Complex> b(size, Complex(0.0, 0.0));
  std::vector<Complex> power(size, Complex(0.0, 0.0));  // Z(zeta)^n, truncated
  std::vector<Complex> next(size);
  power[0] = 1.0;
  b[0] = series[0];
  for (std::size_t n = 1; n < size; ++n) {
    map.multiply_truncated(power, next);
    power.swap(next);
    const Complex a = series[n];
    if (a == Complex(0.0, 0.0)) continue;
    // Z^n starts at zeta^n.
    for (std::size_t m = n; m < size; ++m) b[m] += a * power[m];
  }
  return PowerSeries(std::move(b), map.pole());
}

Complex accelerate_sum(const PowerSeries& series, const ConformalMap& map, int N) {
  const auto b = recoefficient(series, map, N);
  CompensatedComplexSum sum;
  for (const auto& c : b.coefficients()) sum.add(c);
  return sum.value();
}

double euler_equivalence_check(const PowerSeries& series, int N) {
  const Complex mapped = accelerate_sum(series, ConformalMap::mobius2(), N);
  const EulerWeightTable table(N);
  CompensatedComplexSum weighted;
  for (int n = 0; n <= N; ++n) weighted.add(series[static_cast<std::size_t>(n)] * table.sigma(n));
  return std::abs(mapped - weighted.value());
}

PowerSeries upper_half_series(const FourierSeries& series, double x, int N) {
  if (N < 0 || N > series.n_max()) throw RangeError("upper_half_series: N beyond n_max");
  std::vector<Complex> a(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) a[n] = series.coeff(n) * std::polar(1.0, n * x);
  return PowerSeries(std::move(a));
}

PowerSeries lower_half_series(const FourierSeries& series, double x, int N) {
  if (N < 0 || N > series.n_max()) throw RangeError("lower_half_series: N beyond n_max");
  std::vector<Complex> a(static_cast<std::size_t>(N) + 1, Complex(0.0, 0.0));
  for (int n = 1; n <= N; ++n) a[n] = series.coeff(-n) * std::polar(1.0, -n * x);
  return PowerSeries(std::move(a));
}

Complex conformal_fourier_sum(const FourierSeries& series, double x, int N,
                              const ConformalMap& map) {
  return accelerate_sum(upper_half_series(series, x, N), map, N) +
         accelerate_sum(lower_half_series(series, x, N), map, N);
}

Complex abel_extend_eval(const FourierSeries& series, double x, Complex z,
                         std::optional<long> summability_cap) {
  const double r = std::abs(z);
  if (r > 1.0) throw DivergenceError("Abel extension diverges for |z| > 1");
  long limit = series.n_max();
  if (r == 1.0) {
    if (!summability_cap) throw DivergenceError("|z| = 1 requires a summability cap");
    limit = std::min(limit, *summability_cap);
  }

  CompensatedComplexSum sum;
  sum.add(series.coeff(0));
  Complex zn(1.0, 0.0);
  const double bound = series.coeff_bound();
  for (long n = 1; n <= limit; ++n) {
    zn *= z;
    sum.add(series.coeff(n) * zn * std::polar(1.0, n * x));
    sum.add(series.coeff(-n) * zn * std::polar(1.0, -n * x));
    if (r < 1.0) {
      const double tail = 2.0 * bound * std::abs(zn) * r / (1.0 - r);
      if (tail <= 1e-15 * std::abs(sum.value())) break;
    }
  }
  return sum.value();
}

double estimate_radius(const PowerSeries& series) {
  std::vector<int> nonzero;
  for (int n = 1; n <= series.degree(); ++n) {
    if (series[static_cast<std::size_t>(n)] != Complex(0.0, 0.0)) nonzero.push_back(n);
  }
  if (nonzero.size() < 16) {
    throw UndefinedRadiusError("root test needs at least 16 nonzero coefficients");
  }
  const int last = series.degree();
  const int first = last - last / 3;
  std::vector<double> roots;
  for (int n : nonzero) {
    if (n < first) continue;
    roots.push_back(std::pow(std::abs(series[static_cast<std::size_t>(n)]), -1.0 / n));
  }
  if (roots.empty()) throw UndefinedRadiusError("coefficient tail is identically zero");
  const auto mid = roots.begin() + static_cast<std::ptrdiff_t>(roots.size() / 2);
  std::nth_element(roots.begin(), mid, roots.end());
  if (roots.size() % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(roots.begin(), mid);
  return 0.5 * (lower + upper);
}

PowerSeries resolvable_prefix(const PowerSeries& series, double relative_floor) {
  double largest = 0.0;
  for (const auto& c : series.coefficients()) largest = std::max(largest, std::abs(c));
  const double floor = relative_floor * largest;
  int last = 0;
  for (int n = 1; n <= series.degree(); ++n) {
    if (std::abs(series[static_cast<std::size_t>(n)]) <= floor) break;
    last = n;
  }
  return series.truncated(last);
}

}  // namespace gibbs
