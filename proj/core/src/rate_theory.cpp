#include "gibbs/rate_theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

constexpr double kMetricCap = 2.0;

std::complex<double> int_power(std::complex<double> base, int exponent) {
  std::complex<double> result(1.0, 0.0);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

ZImage z_image(const OffAxisSingularity& sing, double x) {
  if (sing.tau < 0.0) return {std::exp(std::abs(sing.tau)), sing.sigma - x};
  return {std::exp(sing.tau), x - sing.sigma};
}

std::array<ZImage, 2> real_singularity_images(double sigma0, double x) {
  return {ZImage{1.0, x - sigma0}, ZImage{1.0, -(x - sigma0)}};
}

double zeta_image_modulus(double r, double theta) {
  if (!(r >= 1.0)) throw ArgumentError("zeta_image_modulus: r must be >= 1");
  const double den = 1.0 + r * r + 2.0 * r * std::cos(theta);
  if (den <= 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 * r / std::sqrt(den);
}

RatePrediction rho_of_x(const SingularitySet& sings, double x) {
  RatePrediction out;
  out.x = x;
  out.rho = kMetricCap;
  out.dominating = DominantTerm::Metric;

  if (sings.has_real()) {
    const double d = sings.distance(x);
    if (d == 0.0) {
      out.rho = 1.0;
      out.q = 0.0;
      out.dominating = DominantTerm::RealSingularity;
      out.at_singularity = true;
      return out;
    }
    const double image = zeta_image_modulus(1.0, d);
    if (image < out.rho) {
      out.rho = image;
      out.dominating = DominantTerm::RealSingularity;
    }
  }
  const auto off = sings.off_axis();
  for (std::size_t j = 0; j < off.size(); ++j) {
    const ZImage z = z_image(off[j], x);
    const double image = zeta_image_modulus(z.modulus, z.angle);
    if (image < out.rho) {
      out.rho = image;
      out.dominating = DominantTerm::OffAxis;
      out.off_axis_index = j;
    }
  }
  out.q = std::log(out.rho);
  return out;
}

double predicted_envelope(const SingularitySet& sings, double x, int N, double prefactor) {
  if (N < 1) throw ArgumentError("predicted_envelope: N must be >= 1");
  const double q = rho_of_x(sings, x).q;
  return prefactor * std::exp(-q * N) / N;
}

std::complex<double> delta_truncation_error(double x, int N) {
  if (N < 0) throw ArgumentError("delta_truncation_error: N must be >= 0");
  if (wrap_to_pi(x) == 0.0) throw DomainError("delta_truncation_error: x is the singular point");
  // The zeta series is (1 - zeta/2) sum_n (w^n + conj(w)^n) zeta^n - 1, so the
  // tail past zeta^N sums to w^N (w - 1/2) / (1 - w) per side, w - 1/2 = e^{ix}/2.
  std::complex<double> total(0.0, 0.0);
  for (const double sign : {1.0, -1.0}) {
    const std::complex<double> e = std::polar(1.0, sign * x);
    const std::complex<double> w = 0.5 * (1.0 + e);
    total += int_power(w, N) * (0.5 * e) / (1.0 - w);
  }
  return total;
}

std::vector<PenaltySample> acceleration_penalty_region(const SingularitySet& sings,
                                                       int resolution) {
  if (sings.off_axis().empty()) {
    throw NotApplicableError("penalty region needs at least one off-axis singularity");
  }
  if (resolution < 2) throw ArgumentError("penalty region needs resolution >= 2");
  double min_tau = std::numeric_limits<double>::infinity();
  for (const auto& s : sings.off_axis()) min_tau = std::min(min_tau, std::abs(s.tau));
  const double rho_raw = std::exp(min_tau);

  std::vector<PenaltySample> out;
  out.reserve(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double x = -std::numbers::pi + 2.0 * std::numbers::pi * i / (resolution - 1);
    const double rho = rho_of_x(sings, x).rho;
    out.push_back({x, rho, rho_raw, rho < rho_raw});
  }
  return out;
}

}  // namespace gibbs
