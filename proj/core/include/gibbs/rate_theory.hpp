#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "gibbs/singularities.hpp"

namespace gibbs {

/// Position r * exp(i angle) of a singularity of the Abel extension in the
/// z-plane for a fixed real x.
struct ZImage {
  double modulus = 1.0;
  double angle = 0.0;
};

/// Image of x_j = sigma + i tau: |z| = exp(|tau|); angle sigma - x when
/// tau < 0, x - sigma when tau > 0. With tau == 0 this is one member of the
/// real singularity's pair on the unit circle (angle x - sigma).
ZImage z_image(const OffAxisSingularity& sing, double x);

/// Both unit-circle images +-(x - sigma0) of a real singularity.
std::array<ZImage, 2> real_singularity_images(double sigma0, double x);

/// |zeta| = 2 r / sqrt(1 + r^2 + 2 r cos(theta)) under zeta = 2z/(1+z).
/// Returns +infinity when the singularity lands on z = -1 (r = 1, theta = pi):
/// it maps to zeta = infinity and never limits convergence.
double zeta_image_modulus(double r, double theta);

enum class DominantTerm { Metric, RealSingularity, OffAxis };

struct RatePrediction {
  double x = 0.0;
  double rho = 1.0;  ///< convergence factor, 1 <= rho <= 2
  double q = 0.0;    ///< log(rho)
  DominantTerm dominating = DominantTerm::Metric;
  std::optional<std::size_t> off_axis_index;  ///< set when dominating == OffAxis
  bool at_singularity = false;                ///< x on the real singularity: no acceleration
};

/// rho(x) = min(2, |zeta_0(x)|, |zeta_j(x)|...) for the Euler-accelerated series.
/// The metric cap wins for |x| >= 2*pi/3 on a jump-only set as a consequence
/// of the min, not by a branch.
RatePrediction rho_of_x(const SingularitySet& sings, double x);

/// prefactor * exp(-q(x) N) / N.
double predicted_envelope(const SingularitySet& sings, double x, int N, double prefactor);

/// Exact truncation error of the Euler-summed periodized delta after N terms:
/// w^N e^{ix} / (2 (1 - w)) + conj-side term, w = (1 + e^{ix})/2. The
/// shorter form w^{N+1}/(1 - w) + conj drops the (1 - zeta/2) factor of the
/// re-expanded series and agrees only where sin((N-1) x / 2) = 0.
std::complex<double> delta_truncation_error(double x, int N);

struct PenaltySample {
  double x = 0.0;
  double rho_euler = 1.0;
  double rho_raw = 1.0;
  bool penalized = false;  ///< rho_euler < rho_raw: acceleration slowed convergence
};

/// Sample x uniformly on [-pi, pi] (`resolution` points, ends included) and
/// compare the Euler factor with the raw geometric factor exp(min |tau_j|).
std::vector<PenaltySample> acceleration_penalty_region(const SingularitySet& sings, int resolution);

}  // namespace gibbs
