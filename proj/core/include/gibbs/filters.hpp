#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gibbs {

/// Largest Euler order supported; mu(M, 0) = 2^-M must stay a normal double.
inline constexpr int kEulerMaxOrder = 1000;

/// Euler partial-sum weight mu(M, k) = M! / (2^M k! (M-k)!).
double euler_mu(int M, int k);

/// Euler filter weight sigma_E(j / (M+1)) = sum_{k=j}^{M} mu(M, k), with
/// sigma_E(0) = 1 and sigma_E(1) = 0.
double euler_sigma(int j, int M);

/// Erfc-Log weight 0.5 * erfc(2 sqrt(p) tb L(tb)), tb = |theta| - 1/2.
double erfclog_sigma(double theta, double p);

/// Spatially varying Erfc-Log order 1 + N |x| / (2 pi). `x` is the distance
/// to the singularity as the caller defines it.
double erfclog_order(double x, int N);

/// HDAF weight with alpha = 1, kappa = 1/15:
/// exp(-s) * sum_{j=0}^{J} s^j / j!, s = N d theta^2 / 2, J = floor(N d / 15).
double hdaf_sigma(double theta, int N, double x_dist);

/// Immutable row of Euler weights for one order M.
class EulerWeightTable {
 public:
  explicit EulerWeightTable(int M);

  int order() const noexcept { return order_; }
  /// mu(M, k), 0 <= k <= M.
  double mu(int k) const;
  /// sigma_E(j / (M+1)), 0 <= j <= M+1.
  double sigma(int j) const;

  std::span<const double> mus() const noexcept { return mu_; }
  std::span<const double> sigmas() const noexcept { return sigma_; }

 private:
  int order_;
  std::vector<double> mu_;
  std::vector<double> sigma_;
};

enum class FilterKind { Identity, Euler, ErfcLog, Hdaf };

/// A linear summation filter. Weights are produced on |n| = 0..N, so the
/// symmetry sigma(-theta) = sigma(theta) holds by construction.
///
/// Argument convention: Euler is indexed by n/(N+1) with M = N; Erfc-Log and
/// HDAF use theta = n/N.
class FilterSpec {
 public:
  static FilterSpec identity() { return FilterSpec(FilterKind::Identity); }
  static FilterSpec euler() { return FilterSpec(FilterKind::Euler); }
  /// Erfc-Log with the adaptive order p = 1 + N d(x) / (2 pi).
  static FilterSpec erfc_log() { return FilterSpec(FilterKind::ErfcLog); }
  static FilterSpec erfc_log(double fixed_order);
  static FilterSpec hdaf() { return FilterSpec(FilterKind::Hdaf); }

  /// Accepts "identity"/"none", "euler", "erfclog"/"erfc-log", "hdaf".
  static FilterSpec parse(std::string_view name);

  FilterKind kind() const noexcept { return kind_; }
  const std::optional<double>& fixed_order() const noexcept { return fixed_order_; }
  bool adaptive() const noexcept;
  std::string name() const;

  /// Weights sigma(|n|; N, d) for |n| = 0..N. `x_dist` is the distance from
  /// the evaluation point to the real singularity; only adaptive kinds use it.
  std::vector<double> weights(int N, double x_dist) const;

  friend bool operator==(const FilterSpec&, const FilterSpec&) = default;

 private:
  explicit FilterSpec(FilterKind kind) : kind_(kind) {}

  FilterKind kind_;
  std::optional<double> fixed_order_;
};

}  // namespace gibbs
