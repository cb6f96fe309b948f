#include "gibbs/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

constexpr std::size_t kMinEnvelopePoints = 5;

}  // namespace

void validate(const ExperimentConfig& config) {
  const auto keys = test_function_keys();
  if (std::find(keys.begin(), keys.end(), config.function_key) == keys.end()) {
    throw ConfigError("unknown test function '" + config.function_key + "'");
  }
  if (config.filters.empty()) throw ConfigError("no filters configured");
  if (config.xs.empty()) throw ConfigError("no evaluation points configured");
  if (config.n_stride < 1) throw ConfigError("N stride must be >= 1");
  if (config.n_min < 0 || config.n_min > config.n_max) {
    throw ConfigError("empty N range [" + std::to_string(config.n_min) + ", " +
                      std::to_string(config.n_max) + "]");
  }
  if (config.n_max > kEulerMaxOrder) {
    throw ConfigError("n_max beyond the supported Euler order " + std::to_string(kEulerMaxOrder));
  }
  if (!(config.saturation_factor >= 0.0)) throw ConfigError("saturation factor must be >= 0");
  auto params = config.function_params;
  params.n_max = std::max<long>(params.n_max, config.n_max);
  const auto series = make_test_function(config.function_key, params);
  for (const double x : config.xs) {
    if (!std::isfinite(x)) throw ConfigError("evaluation point must be finite");
    const auto& sing = series.singularities();
    if (sing && sing->has_real() && sing->distance(x) == 0.0) {
      throw ConfigError("x=" + std::to_string(x) + " is the real singularity of '" +
                        config.function_key + "'");
    }
  }
}

std::vector<std::size_t> envelope_indices(std::span<const TraceRow> rows) {
  std::vector<std::size_t> out;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = rows.size(); i-- > 0;) {
    const auto& r = rows[i];
    if (r.saturated || !(r.error > 0.0)) continue;
    if (r.error > best) {
      best = r.error;
      out.push_back(i);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

EnvelopeFit fit_envelope(const ErrorTrace& trace) {
  const auto env = envelope_indices(trace.rows);
  if (env.size() < kMinEnvelopePoints) {
    throw InsufficientDataError("envelope has " + std::to_string(env.size()) +
                                " unsaturated points; need " + std::to_string(kMinEnvelopePoints));
  }
  // Ordinary least squares of y = log(err) + log(N) against N: y = log A - q N.
  const auto m = static_cast<double>(env.size());
  double sx = 0.0, sy = 0.0;
  for (auto i : env) {
    const auto& r = trace.rows[i];
    sx += r.n;
    sy += std::log(r.error) + std::log(static_cast<double>(r.n));
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (auto i : env) {
    const auto& r = trace.rows[i];
    const double dx = r.n - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(r.error) + std::log(static_cast<double>(r.n)) - my);
  }
  if (sxx == 0.0) throw InsufficientDataError("envelope points share a single N");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;

  double lift = -std::numeric_limits<double>::infinity();
  for (auto i : env) {
    const auto& r = trace.rows[i];
    const double y = std::log(r.error) + std::log(static_cast<double>(r.n));
    lift = std::max(lift, y - (intercept + slope * r.n));
  }
  return {std::exp(intercept + lift), -slope, std::exp(intercept), env.size()};
}

double saturation_floor(const FourierSeries& series, int N, const ExperimentConfig& config) {
  if (config.saturation_floor) return *config.saturation_floor;
  return config.saturation_factor * std::numeric_limits<double>::epsilon() * series.magnitude_sum(N);
}

std::vector<ErrorTrace> sweep_errors(const ExperimentConfig& config) {
  validate(config);
  auto params = config.function_params;
  params.n_max = std::max<long>(params.n_max, config.n_max);
  const auto series = make_test_function(config.function_key, params);

  std::vector<double> floors;
  for (int n = config.n_min; n <= config.n_max; n += config.n_stride) {
    floors.push_back(saturation_floor(series, n, config));
  }

  std::vector<ErrorTrace> traces;
  for (const double x : config.xs) {
    for (const auto& filter : config.filters) {
      ErrorTrace trace;
      trace.x = x;
      trace.filter = filter;
      std::size_t k = 0;
      for (int n = config.n_min; n <= config.n_max; n += config.n_stride, ++k) {
        const double err = pointwise_error(series, x, n, filter);
        trace.rows.push_back({n, err, floors[k], err < floors[k]});
      }
      trace.envelope = envelope_indices(trace.rows);
      if (trace.envelope.size() >= kMinEnvelopePoints) trace.fit = fit_envelope(trace);
      traces.push_back(std::move(trace));
    }
  }
  return traces;
}

std::vector<RhoCurveRow> rho_curve(const SingularitySet& sings, int resolution) {
  if (resolution < 2) throw ConfigError("rho curve needs resolution >= 2");
  std::vector<PenaltySample> penalty;
  if (!sings.off_axis().empty()) penalty = acceleration_penalty_region(sings, resolution);

  std::vector<RhoCurveRow> rows;
  rows.reserve(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double x = -std::numbers::pi + 2.0 * std::numbers::pi * i / (resolution - 1);
    RhoCurveRow row;
    row.x = x;
    row.prediction = rho_of_x(sings, x);
    if (sings.has_real()) {
      const double d = sings.distance(x);
      row.zeta_real = d == 0.0 ? 1.0 : zeta_image_modulus(1.0, d);
    }
    for (const auto& s : sings.off_axis()) {
      const ZImage z = z_image(s, x);
      row.zeta_off_axis.push_back(zeta_image_modulus(z.modulus, z.angle));
    }
    if (!penalty.empty()) {
      row.rho_raw = penalty[i].rho_raw;
      row.penalized = penalty[i].penalized;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RhoCurveRow> rho_curve(std::string_view function_key, int resolution,
                                   const TestFunctionParams& params) {
  auto p = params;
  p.n_max = 1;  // only the singularity set is needed
  const auto series = make_test_function(function_key, p);
  if (!series.singularities()) throw ConfigError("function has no declared singularity set");
  return rho_curve(*series.singularities(), resolution);
}

FilterComparison compare_filters(const ExperimentConfig& config) {
  if (config.xs.empty()) throw ConfigError("compare needs an evaluation point");
  ExperimentConfig cfg = config;
  cfg.xs = {config.xs.front()};
  cfg.filters = {FilterSpec::euler(), FilterSpec::erfc_log(), FilterSpec::hdaf(),
                 FilterSpec::identity()};
  FilterComparison out;
  out.x = cfg.xs.front();
  out.traces = sweep_errors(cfg);
  const auto& t = out.traces;
  for (std::size_t k = 0; k < t.front().rows.size(); ++k) {
    out.rows.push_back({t[0].rows[k].n, t[0].rows[k].error, t[1].rows[k].error,
                        t[2].rows[k].error, t[3].rows[k].error});
  }
  return out;
}

double predicted_rate(std::string_view function_key, double x, const TestFunctionParams& params) {
  auto p = params;
  p.n_max = 1;
  const auto series = make_test_function(function_key, p);
  if (!series.singularities()) throw ConfigError("function has no declared singularity set");
  return rho_of_x(*series.singularities(), x).q;
}

}  // namespace gibbs
