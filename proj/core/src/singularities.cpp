#include "gibbs/singularities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gibbs/errors.hpp"

namespace gibbs {

double wrap_to_pi(double x) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(x, two_pi);  // in [-pi, pi]
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

SingularitySet::SingularitySet(std::optional<double> real_location,
                               std::vector<OffAxisSingularity> off_axis, bool conjugate_pairs)
    : off_axis_(std::move(off_axis)), conjugate_pairs_(conjugate_pairs) {
  if (real_location) {
    if (!std::isfinite(*real_location)) throw ArgumentError("real singularity must be finite");
    real_location_ = wrap_to_pi(*real_location);
  }
  for (const auto& s : off_axis_) {
    if (!std::isfinite(s.sigma) || !std::isfinite(s.tau) || s.tau == 0.0) {
      throw ArgumentError("off-axis singularity needs finite sigma and nonzero tau");
    }
  }
  if (conjugate_pairs_) {
    auto count = [this](OffAxisSingularity s) {
      return std::count(off_axis_.begin(), off_axis_.end(), s);
    };
    for (const auto& s : off_axis_) {
      if (count(s) != count({s.sigma, -s.tau})) {
        throw ArgumentError("off-axis singularities of a real function must come in conjugate pairs");
      }
    }
  }
}

SingularitySet SingularitySet::real_only(double location) {
  return SingularitySet(location, {}, true);
}

double SingularitySet::distance(double x) const noexcept {
  if (!real_location_) return std::numbers::pi;
  return std::abs(wrap_to_pi(x - *real_location_));
}

SingularitySet SingularitySet::merged_with(const SingularitySet& other) const {
  if (real_location_ && other.real_location_ && *real_location_ != *other.real_location_) {
    throw ArgumentError("at most one real singularity per period is supported");
  }
  auto off = off_axis_;
  off.insert(off.end(), other.off_axis_.begin(), other.off_axis_.end());
  return SingularitySet(real_location_ ? real_location_ : other.real_location_, std::move(off),
                        conjugate_pairs_ && other.conjugate_pairs_);
}

}  // namespace gibbs
