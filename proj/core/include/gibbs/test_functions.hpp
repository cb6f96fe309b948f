#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gibbs/conformal.hpp"
#include "gibbs/fourier_series.hpp"

namespace gibbs {

inline constexpr long kDefaultTestNMax = 4096;

/// Shifted sawtooth: x - pi on [0, 2 pi), extended periodically. At the jump
/// (x = 0 mod 2 pi) the right limit -pi is returned; the Fourier series itself
/// converges to the mean 0 there.
double sws(double x);
/// c_0 = 0, c_n = i/n, c_{-n} = -i/n.
Complex sws_coeff(long n);

/// Symmetric imbricated Lorentzian (1 - p^2) / ((1 + p^2) - 2 p cos(x - phi)),
/// 0 < p < 1. Simple poles at x = phi +- i tau + 2 pi m, tau = -log p.
double lorentzian(double x, double p, double phi);
/// c_n = p^|n| exp(-i n phi).
Complex lorentzian_coeff(long n, double p, double phi);

/// Periodized Dirac delta: every coefficient is 1.
Complex delta_coeff(long n);

/// Sawtooth plus Lorentzian with poles on Re x = phi (default pi).
double composite(double x, double p, double phi = std::numbers::pi);
Complex composite_coeff(long n, double p, double phi = std::numbers::pi);

/// Alternating harmonic series a_n = (-1)^{n+1}/n, a_0 = 0; sums to log 2.
PowerSeries log2_series(int n_max);

FourierSeries make_sws(long n_max = kDefaultTestNMax);
FourierSeries make_delta(long n_max = kDefaultTestNMax);
FourierSeries make_lorentzian(double p, double phi = std::numbers::pi,
                              long n_max = kDefaultTestNMax);
FourierSeries make_composite(double p, double phi = std::numbers::pi,
                             long n_max = kDefaultTestNMax);
/// log(1 + e^{ix}) = sum_{n>=1} (-1)^{n+1} e^{inx} / n. At x = 0 the Fourier
/// partial sums are the log(2) partial sums; the real singularity sits at pi.
FourierSeries make_log2(long n_max = kDefaultTestNMax);

/// Overrides for registry construction. `tau` wins over `p` when both are set.
struct TestFunctionParams {
  std::optional<double> p;
  std::optional<double> tau;
  double phi = std::numbers::pi;
  long n_max = kDefaultTestNMax;
};

/// Registry keys: "sws", "delta", "lorentzian", "sws+lorentzian", "log2".
/// Defaults: lorentzian p = exp(-1/5); sws+lorentzian p = 1/2.
FourierSeries make_test_function(std::string_view key, const TestFunctionParams& params = {});
std::vector<std::string> test_function_keys();

}  // namespace gibbs
