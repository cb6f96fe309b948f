#pragma once

#include <optional>
#include <span>
#include <vector>

namespace gibbs {

/// A singularity of f at x = sigma + i*tau with tau != 0.
struct OffAxisSingularity {
  double sigma = 0.0;
  double tau = 0.0;

  friend bool operator==(const OffAxisSingularity&, const OffAxisSingularity&) = default;
};

/// Declared singularities of a 2*pi-periodic function: at most one on the
/// real axis (reduced into (-pi, pi]) plus any number off the axis.
///
/// When `conjugate_pairs` is set (real-valued f), every (sigma, tau) must be
/// matched by (sigma, -tau) with the same multiplicity.
class SingularitySet {
 public:
  SingularitySet() = default;
  SingularitySet(std::optional<double> real_location, std::vector<OffAxisSingularity> off_axis,
                 bool conjugate_pairs);

  /// Only a jump/singular point on the real axis.
  static SingularitySet real_only(double location);

  const std::optional<double>& real_location() const noexcept { return real_location_; }
  std::span<const OffAxisSingularity> off_axis() const noexcept { return off_axis_; }
  bool conjugate_pairs() const noexcept { return conjugate_pairs_; }
  bool has_real() const noexcept { return real_location_.has_value(); }

  /// Periodic distance d(x) = min_m |x - x_s - 2*pi*m|, in [0, pi].
  /// Without a real singularity every point is treated as maximally far (pi).
  double distance(double x) const noexcept;

  /// Union with another set; at most one real singularity may survive.
  SingularitySet merged_with(const SingularitySet& other) const;

 private:
  std::optional<double> real_location_;
  std::vector<OffAxisSingularity> off_axis_;
  bool conjugate_pairs_ = false;
};

/// Reduce an angle into (-pi, pi].
double wrap_to_pi(double x) noexcept;

}  // namespace gibbs
