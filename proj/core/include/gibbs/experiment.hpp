#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gibbs/filters.hpp"
#include "gibbs/rate_theory.hpp"
#include "gibbs/test_functions.hpp"

namespace gibbs {

struct ExperimentConfig {
  std::string function_key;
  TestFunctionParams function_params;
  std::vector<FilterSpec> filters;
  std::vector<double> xs;
  int n_min = 1;
  int n_max = 60;
  int n_stride = 1;
  /// Rows with error below factor * eps * sum_{|n|<=N} |c_n| are saturated.
  double saturation_factor = 100.0;
  /// Absolute floor overriding the factor rule.
  std::optional<double> saturation_floor;
};

/// Throws ConfigError describing the first problem found.
void validate(const ExperimentConfig& config);

struct TraceRow {
  int n = 0;
  double error = 0.0;
  double floor = 0.0;
  bool saturated = false;
};

/// Fit of error ~ A exp(-q N) / N over envelope points. `rate` is the
/// least-squares slope; `prefactor` is the smallest A for which the curve
/// bounds every envelope point, `ls_prefactor` the least-squares intercept.
struct EnvelopeFit {
  double prefactor = 0.0;
  double rate = 0.0;
  double ls_prefactor = 0.0;
  std::size_t points = 0;
};

struct ErrorTrace {
  double x = 0.0;
  FilterSpec filter = FilterSpec::identity();
  std::vector<TraceRow> rows;
  std::vector<std::size_t> envelope;  ///< indices into rows
  std::optional<EnvelopeFit> fit;
};

/// Monotone-decreasing upper hull of the unsaturated rows, by one backward
/// pass: a row is kept when its error exceeds every later unsaturated error.
/// Returned indices are increasing.
std::vector<std::size_t> envelope_indices(std::span<const TraceRow> rows);

/// Needs at least 5 unsaturated envelope points; throws InsufficientDataError.
EnvelopeFit fit_envelope(const ErrorTrace& trace);

/// Saturation floor for a truncation N of `series` under `config`.
double saturation_floor(const FourierSeries& series, int N, const ExperimentConfig& config);

/// One trace per (x, filter) pair, x-major, in config order. Envelope and
/// fit are filled when enough unsaturated points exist.
std::vector<ErrorTrace> sweep_errors(const ExperimentConfig& config);

struct RhoCurveRow {
  double x = 0.0;
  RatePrediction prediction;
  std::optional<double> zeta_real;   ///< |zeta_0(x)| when a real singularity exists
  std::vector<double> zeta_off_axis; ///< |zeta_j(x)| in declaration order
  std::optional<double> rho_raw;     ///< exp(min |tau|) when off-axis singularities exist
  std::optional<bool> penalized;
};

/// rho(x) on `resolution` uniform points of [-pi, pi] (ends included).
std::vector<RhoCurveRow> rho_curve(const SingularitySet& sings, int resolution);
std::vector<RhoCurveRow> rho_curve(std::string_view function_key, int resolution,
                                   const TestFunctionParams& params = {});

struct CompareRow {
  int n = 0;
  double err_euler = 0.0;
  double err_erfclog = 0.0;
  double err_hdaf = 0.0;
  double err_identity = 0.0;
};

struct FilterComparison {
  double x = 0.0;
  std::vector<CompareRow> rows;
  /// Traces for euler, erfclog, hdaf, identity (that order), with fits.
  std::vector<ErrorTrace> traces;
};

/// Euler, Erfc-Log and HDAF (plus the unfiltered control) at config.xs[0].
/// config.filters is ignored.
FilterComparison compare_filters(const ExperimentConfig& config);

/// Predicted rate q(x) for a registry function.
double predicted_rate(std::string_view function_key, double x,
                      const TestFunctionParams& params = {});

}  // namespace gibbs
