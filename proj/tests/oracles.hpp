#pragma once

// Reference computations that share no code with the library. Each one takes
// a different route to the same quantity (exact integers, naive convolution,
// extended precision) so agreement means something.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using LComplex = std::complex<long double>;

/// C(M, k) in exact 64-bit integer arithmetic; valid for M <= 62.
inline std::uint64_t binomial(int M, int k) {
  if (k < 0 || k > M) return 0;
  if (k > M - k) k = M - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(M - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// M! / (2^M k! (M-k)!) from the exact binomial.
inline long double euler_mu(int M, int k) {
  return std::ldexp(static_cast<long double>(binomial(M, k)), -M);
}

/// Tail sum of euler_mu from k = j, summed smallest-first.
inline long double euler_sigma(int j, int M) {
  long double s = 0;
  for (int k = M; k >= j; --k) s += euler_mu(M, k);
  return j > M ? 0.0L : s;
}

/// Full product of two polynomials, then truncation to `keep` terms.
inline std::vector<LComplex> poly_mul(const std::vector<LComplex>& a, const std::vector<LComplex>& b,
                                      std::size_t keep) {
  std::vector<LComplex> out(keep, LComplex{});
  for (std::size_t i = 0; i < a.size() && i < keep; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < keep; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Coefficients of sum_n a_n Z(zeta)^n through zeta^N with
/// Z = (c-1) zeta / (c - zeta), expanded as a geometric series and composed by
/// repeated naive multiplication.
inline std::vector<Complex> compose_mobius(const std::vector<Complex>& a, double c, int N) {
  const std::size_t keep = static_cast<std::size_t>(N) + 1;
  std::vector<LComplex> z(keep, LComplex{});
  for (std::size_t k = 1; k < keep; ++k) {
    z[k] = static_cast<long double>(c - 1.0) / std::pow(static_cast<long double>(c), static_cast<long double>(k));
  }
  std::vector<LComplex> power(keep, LComplex{});
  power[0] = 1;
  std::vector<LComplex> acc(keep, LComplex{});
  for (std::size_t n = 0; n < a.size() && n < keep; ++n) {
    for (std::size_t m = 0; m < keep; ++m) acc[m] += LComplex(a[n]) * power[m];
    power = poly_mul(power, z, keep);
  }
  std::vector<Complex> out(keep);
  for (std::size_t m = 0; m < keep; ++m) out[m] = Complex(acc[m]);
  return out;
}

/// The short two-term form w^{N+1}/(1-w) + conj-side, w = (1 + e^{ix})/2,
/// evaluated literally in extended precision.
inline Complex delta_error_short_form(double x, int N) {
  const LComplex e = std::polar(1.0L, static_cast<long double>(x));
  const LComplex wp = (1.0L + e) / 2.0L;
  const LComplex wm = (1.0L + std::conj(e)) / 2.0L;
  return Complex(std::pow(wp, N + 1) / (1.0L - wp) + std::pow(wm, N + 1) / (1.0L - wm));
}

/// Euler partial-sum average sum_k mu(N, k) D_k(x) of the Dirichlet kernels
/// D_k(x) = sum_{|n| <= k} e^{inx}; the filtered delta by a second route.
inline Complex euler_averaged_dirichlet(double x, int N) {
  LComplex total{};
  LComplex dirichlet = 1;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) {
      dirichlet += std::polar(1.0L, static_cast<long double>(k) * x) +
                   std::polar(1.0L, -static_cast<long double>(k) * x);
    }
    total += euler_mu(N, k) * dirichlet;
  }
  return Complex(total);
}

/// HDAF weight by explicit factorials in extended precision (small arguments only).
inline double hdaf_sigma(double theta, int N, double d) {
  const long double s = static_cast<long double>(N) * d * theta * theta / 2.0L;
  const int J = static_cast<int>(std::floor(N * d / 15.0));
  long double sum = 0;
  long double fact = 1;
  for (int j = 0; j <= J; ++j) {
    if (j > 0) fact *= j;
    sum += std::pow(s, static_cast<long double>(j)) / fact;
  }
  return static_cast<double>(std::exp(-s) * sum);
}

/// Uniform random complex coefficients with |a_n| <= 1.
inline std::vector<Complex> random_coeffs(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<Complex> a(static_cast<std::size_t>(count));
  for (auto& v : a) v = std::polar(radius(rng), angle(rng));
  return a;
}

}  // namespace oracle
