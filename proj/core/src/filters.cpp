#include "gibbs/filters.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "gibbs/compensated_sum.hpp"
#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

void check_order(int M) {
  if (M < 0 || M > kEulerMaxOrder) {
    throw ArgumentError("Euler order M=" + std::to_string(M) + " outside [0, " +
                        std::to_string(kEulerMaxOrder) + "]");
  }
}

// Beyond |arg| = 40 erfc is 0 or 2 to double precision.
constexpr double kErfcClamp = 40.0;

}  // namespace

double euler_mu(int M, int k) {
  check_order(M);
  if (k < 0 || k > M) throw ArgumentError("euler_mu: k outside [0, M]");
  // Walk from the nearer end; mu is symmetric in k <-> M-k.
  const int steps = std::min(k, M - k);
  double mu = std::ldexp(1.0, -M);
  for (int i = 0; i < steps; ++i) mu = mu * (M - i) / (i + 1);
  return mu;
}

EulerWeightTable::EulerWeightTable(int M) : order_(M) {
  check_order(M);
  mu_.resize(static_cast<std::size_t>(M) + 1);
  mu_[0] = std::ldexp(1.0, -M);
  for (int k = 0; k < M / 2; ++k) mu_[k + 1] = mu_[k] * (M - k) / (k + 1);
  for (int k = 0; k <= M; ++k) {
    if (k > M / 2) mu_[k] = mu_[M - k];
  }

  // Tail sums, smallest terms first, over the upper half only. The lower half
  // follows from mu(M, k) = mu(M, M-k), which keeps sigma in [0, 1] and
  // monotone even though the rounded mu do not sum to exactly 1.
  sigma_.assign(static_cast<std::size_t>(M) + 2, 0.0);
  CompensatedSum tail;
  for (int j = M; j >= M - j + 1; --j) {
    tail.add(mu_[j]);
    sigma_[j] = tail.value();
  }
  for (int j = 1; j < M - j + 1; ++j) sigma_[j] = 1.0 - sigma_[M + 1 - j];
  sigma_[0] = 1.0;
  sigma_[M + 1] = 0.0;
}

double EulerWeightTable::mu(int k) const {
  if (k < 0 || k > order_) throw ArgumentError("EulerWeightTable::mu: k outside [0, M]");
  return mu_[k];
}

double EulerWeightTable::sigma(int j) const {
  if (j < 0 || j > order_ + 1) throw ArgumentError("EulerWeightTable::sigma: j outside [0, M+1]");
  return sigma_[j];
}

double euler_sigma(int j, int M) {
  check_order(M);
  if (j < 0 || j > M + 1) throw ArgumentError("euler_sigma: j outside [0, M+1]");
  if (j == 0) return 1.0;
  if (j == M + 1) return 0.0;
  if (j < M - j + 1) return 1.0 - euler_sigma(M + 1 - j, M);
  CompensatedSum tail;
  for (int k = M; k >= j; --k) tail.add(euler_mu(M, k));
  return tail.value();
}

double erfclog_sigma(double theta, double p) {
  if (!(std::abs(theta) <= 1.0)) throw ArgumentError("erfclog_sigma: |theta| > 1");
  if (!(p > 0.0)) throw ArgumentError("erfclog_sigma: order p must be positive");
  const double a = std::abs(theta);
  if (a == 0.0) return 1.0;
  if (a == 1.0) return 0.0;
  const double tb = a - 0.5;
  const double t2 = 4.0 * tb * tb;
  // L -> 1 as tb -> 0; log1p keeps the ratio accurate near there.
  const double log_factor = t2 == 0.0 ? 1.0 : std::sqrt(-std::log1p(-t2) / t2);
  const double arg = std::clamp(2.0 * std::sqrt(p) * tb * log_factor, -kErfcClamp, kErfcClamp);
  return 0.5 * std::erfc(arg);
}

double erfclog_order(double x, int N) {
  if (N < 1) throw ArgumentError("erfclog_order: N must be >= 1");
  return 1.0 + N * std::abs(x) / (2.0 * std::numbers::pi);
}

double hdaf_sigma(double theta, int N, double x_dist) {
  if (N < 1) throw ArgumentError("hdaf_sigma: N must be >= 1");
  if (!(x_dist >= 0.0)) throw ArgumentError("hdaf_sigma: distance must be nonnegative");
  const double nd = N * x_dist;
  const double s = nd * theta * theta / 2.0;
  if (s == 0.0) return 1.0;
  const auto terms = static_cast<long>(std::floor(nd / 15.0));

  // Running-term recurrence; rescale when the partial sum grows large so
  // that exp(-s) can be applied in the log domain at the end.
  constexpr double kRescale = 1e280;
  const double log_rescale = std::log(kRescale);
  double term = 1.0;
  double sum = 1.0;
  double log_offset = 0.0;
  for (long j = 1; j <= terms; ++j) {
    term *= s / static_cast<double>(j);
    sum += term;
    if (sum > kRescale) {
      sum /= kRescale;
      term /= kRescale;
      log_offset += log_rescale;
    }
  }
  return std::min(1.0, std::exp(std::log(sum) + log_offset - s));
}

FilterSpec FilterSpec::erfc_log(double fixed_order) {
  if (!(fixed_order > 0.0)) throw ArgumentError("Erfc-Log order must be positive");
  FilterSpec spec(FilterKind::ErfcLog);
  spec.fixed_order_ = fixed_order;
  return spec;
}

FilterSpec FilterSpec::parse(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "identity" || key == "none") return identity();
  if (key == "euler") return euler();
  if (key == "erfclog" || key == "erfc-log") return erfc_log();
  if (key == "hdaf") return hdaf();
  throw ArgumentError("unknown filter '" + std::string(name) + "'");
}

bool FilterSpec::adaptive() const noexcept {
  return kind_ == FilterKind::Hdaf || (kind_ == FilterKind::ErfcLog && !fixed_order_);
}

std::string FilterSpec::name() const {
  switch (kind_) {
    case FilterKind::Identity:
      return "identity";
    case FilterKind::Euler:
      return "euler";
    case FilterKind::ErfcLog:
      return "erfclog";
    case FilterKind::Hdaf:
      return "hdaf";
  }
  return "unknown";
}

std::vector<double> FilterSpec::weights(int N, double x_dist) const {
  if (N < 0) throw ArgumentError("filter weights need N >= 0");
  std::vector<double> w(static_cast<std::size_t>(N) + 1, 1.0);
  if (N == 0) return w;

  switch (kind_) {
    case FilterKind::Identity:
      break;
    case FilterKind::Euler: {
      const EulerWeightTable table(N);
      for (int n = 0; n <= N; ++n) w[n] = table.sigma(n);
      break;
    }
    case FilterKind::ErfcLog: {
      const double p = fixed_order_ ? *fixed_order_ : erfclog_order(x_dist, N);
      for (int n = 0; n <= N; ++n) w[n] = erfclog_sigma(static_cast<double>(n) / N, p);
      break;
    }
    case FilterKind::Hdaf:
      for (int n = 0; n <= N; ++n) w[n] = hdaf_sigma(static_cast<double>(n) / N, N, x_dist);
      break;
  }
  return w;
}

}  // namespace gibbs
