#include "gibbs/experiment.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gibbs/errors.hpp"

namespace {

using gibbs::ErrorTrace;
using gibbs::ExperimentConfig;
using gibbs::FilterSpec;
using gibbs::TraceRow;
constexpr double pi = std::numbers::pi;

ExperimentConfig sws_config(double x, int n_min, int n_max) {
  ExperimentConfig c;
  c.function_key = "sws";
  c.filters = {FilterSpec::euler()};
  c.xs = {x};
  c.n_min = n_min;
  c.n_max = n_max;
  return c;
}

TEST(Validate, RejectsBadConfigs) {
  auto c = sws_config(1.0, 5, 4);
  EXPECT_THROW(gibbs::validate(c), gibbs::ConfigError);
  c = sws_config(0.0, 1, 10);
  EXPECT_THROW(gibbs::validate(c), gibbs::ConfigError);
  c = sws_config(2 * pi, 1, 10);
  EXPECT_THROW(gibbs::validate(c), gibbs::ConfigError);
  c = sws_config(1.0, 1, 10);
  c.function_key = "nope";
  EXPECT_THROW(gibbs::validate(c), gibbs::ConfigError);
  c = sws_config(1.0, 1, 10);
  c.filters.clear();
  EXPECT_THROW(gibbs::validate(c), gibbs::ConfigError);
  c = sws_config(1.0, 1, 10);
  c.n_stride = 0;
  EXPECT_THROW(gibbs::validate(c), gibbs::ConfigError);
  c = sws_config(1.0, 1, gibbs::kEulerMaxOrder + 1);
  EXPECT_THROW(gibbs::validate(c), gibbs::ConfigError);
  EXPECT_NO_THROW(gibbs::validate(sws_config(1.0, 1, 10)));
}

TEST(EnvelopeIndices, BackwardPassUpperHull) {
  std::vector<TraceRow> rows{{1, 5.0}, {2, 6.0}, {3, 1.0}, {4, 2.0}, {5, 0.5}, {6, 0.1, 1.0, true}};
  const auto env = gibbs::envelope_indices(rows);
  EXPECT_EQ(env, (std::vector<std::size_t>{1, 3, 4}));
}

TEST(FitEnvelope, ExactModelRecovered) {
  ErrorTrace t;
  for (int n = 5; n <= 50; ++n) t.rows.push_back({n, 2.0 * std::exp(-0.5 * n) / n});
  const auto fit = gibbs::fit_envelope(t);
  EXPECT_NEAR(fit.prefactor, 2.0, 1e-6);
  EXPECT_NEAR(fit.ls_prefactor, 2.0, 1e-6);
  EXPECT_NEAR(fit.rate, 0.5, 1e-6);
  EXPECT_EQ(fit.points, 46u);
}

TEST(FitEnvelope, InsufficientData) {
  ErrorTrace t;
  for (int n = 1; n <= 20; ++n) t.rows.push_back({n, 1e-20, 1e-15, true});
  EXPECT_THROW((void)gibbs::fit_envelope(t), gibbs::InsufficientDataError);
  ErrorTrace few;
  for (int n = 1; n <= 4; ++n) few.rows.push_back({n, 1.0 / n});
  EXPECT_THROW((void)gibbs::fit_envelope(few), gibbs::InsufficientDataError);
}

TEST(SweepErrors, OrderingAndShape) {
  auto c = sws_config(1.0, 2, 20);
  c.xs = {1.0, 2.0};
  c.filters = {FilterSpec::euler(), FilterSpec::identity()};
  c.n_stride = 3;
  const auto traces = gibbs::sweep_errors(c);
  ASSERT_EQ(traces.size(), 4u);
  EXPECT_EQ(traces[0].x, 1.0);
  EXPECT_EQ(traces[1].filter, FilterSpec::identity());
  EXPECT_EQ(traces[2].x, 2.0);
  ASSERT_EQ(traces[0].rows.size(), 7u);
  EXPECT_EQ(traces[0].rows.back().n, 20);
}

TEST(SweepErrors, SawtoothRateAtFiveEighthsPi) {
  const auto traces = gibbs::sweep_errors(sws_config(5 * pi / 8, 2, 60));
  ASSERT_TRUE(traces[0].fit.has_value());
  const double q = -std::log(std::cos(5 * pi / 16));
  EXPECT_NEAR(traces[0].fit->rate, q, 0.05 * q);
}

TEST(SweepErrors, SawtoothRateAtEighthPi) {
  const auto traces = gibbs::sweep_errors(sws_config(pi / 8, 50, 600));
  ASSERT_TRUE(traces[0].fit.has_value());
  const double q = -std::log(std::cos(pi / 16));
  EXPECT_NEAR(traces[0].fit->rate, q, 0.05 * q);
  EXPECT_GT(traces[0].fit->prefactor, 12.0 / 3);
  EXPECT_LT(traces[0].fit->prefactor, 12.0 * 3);
}

TEST(SweepErrors, MeasuredRateMatchesPrediction) {
  for (double x : {pi / 4, 5 * pi / 8}) {
    const auto traces = gibbs::sweep_errors(sws_config(x, 5, 120));
    ASSERT_TRUE(traces[0].fit.has_value());
    const double q = gibbs::predicted_rate("sws", x);
    EXPECT_NEAR(traces[0].fit->rate, q, 0.05 * q) << "x=" << x;
  }
}

TEST(SweepErrors, DeltaRowsMatchClosedForm) {
  auto c = sws_config(pi / 2, 2, 40);
  c.function_key = "delta";
  const auto traces = gibbs::sweep_errors(c);
  for (const auto& r : traces[0].rows) {
    const double ref = std::abs(gibbs::delta_truncation_error(pi / 2, r.n));
    // The tail cancels exactly at some N, so allow rounding of the 2N+1 terms.
    EXPECT_LE(std::abs(r.error - ref), 1e-12 * ref + 4e-16 * (2 * r.n + 1)) << r.n;
  }
}

TEST(SweepErrors, EnvelopeBoundsEveryRow) {
  for (double x : {pi / 8, pi / 4, 5 * pi / 8}) {
    const auto t = gibbs::sweep_errors(sws_config(x, 5, 200))[0];
    ASSERT_TRUE(t.fit.has_value());
    const std::size_t first = t.envelope.front();
    const std::size_t last = t.envelope.back();
    for (std::size_t i = first; i <= last; ++i) {
      const auto& r = t.rows[i];
      if (r.saturated) continue;
      const double model = t.fit->prefactor * std::exp(-t.fit->rate * r.n) / r.n;
      EXPECT_LE(r.error, 1.2 * model) << "x=" << x << " N=" << r.n;
    }
  }
}

TEST(SweepErrors, SaturatedRowsExcludedAndFitStable) {
  const double x = 5 * pi / 8;
  const auto base = gibbs::sweep_errors(sws_config(x, 5, 50))[0];
  const auto extended = gibbs::sweep_errors(sws_config(x, 5, 150))[0];
  bool any_saturated = false;
  for (const auto& r : extended.rows) any_saturated = any_saturated || r.saturated;
  ASSERT_TRUE(any_saturated);
  for (auto i : extended.envelope) EXPECT_FALSE(extended.rows[i].saturated);
  ASSERT_TRUE(base.fit && extended.fit);
  EXPECT_NEAR(extended.fit->rate, base.fit->rate, 0.01 * base.fit->rate);
}

TEST(SweepErrors, SaturationFloorOverride) {
  auto c = sws_config(1.0, 5, 30);
  c.saturation_floor = 1.0;
  const auto t = gibbs::sweep_errors(c)[0];
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.floor, 1.0);
    EXPECT_TRUE(r.saturated);
  }
  EXPECT_FALSE(t.fit.has_value());
}

TEST(RhoCurve, SawtoothCapBeyondTwoThirdsPi) {
  const auto rows = gibbs::rho_curve("sws", 361);
  ASSERT_EQ(rows.size(), 361u);
  for (const auto& r : rows) {
    if (std::abs(r.x) >= 2 * pi / 3 + 1e-12) EXPECT_NEAR(r.prediction.rho, 2.0, 1e-14);
    if (std::abs(r.x) < 2 * pi / 3 - 1e-9) EXPECT_LT(r.prediction.rho, 2.0);
    EXPECT_TRUE(r.zeta_real.has_value());
    EXPECT_FALSE(r.rho_raw.has_value());
  }
  EXPECT_NEAR(rows[60].x, -2 * pi / 3, 1e-14);  // x = -pi + 2pi*60/360
  EXPECT_NEAR(rows[60].prediction.rho, 2.0, 1e-12);
}

TEST(RhoCurve, LorentzianPenalty) {
  const auto rows = gibbs::rho_curve("lorentzian", 721);
  double min_rho = 3.0;
  bool flagged = false;
  for (const auto& r : rows) {
    min_rho = std::min(min_rho, r.prediction.rho);
    flagged = flagged || r.penalized.value_or(false);
    EXPECT_EQ(r.zeta_off_axis.size(), 2u);
  }
  EXPECT_NEAR(min_rho, 2 * std::exp(0.2) / (1 + std::exp(0.2)), 1e-3);
  EXPECT_TRUE(flagged);
}

TEST(RhoCurve, TauFamilyOrdered) {
  double prev_min = 0.0;
  for (double tau : {0.1, 0.2, 0.5, 1.0}) {
    gibbs::TestFunctionParams p;
    p.tau = tau;
    double m = 3.0;
    for (const auto& r : gibbs::rho_curve("sws+lorentzian", 181, p)) {
      if (std::abs(r.x - pi) < 1e-12) m = r.prediction.rho;
    }
    EXPECT_GT(m, prev_min);
    prev_min = m;
  }
}

ExperimentConfig fig8_config() {
  ExperimentConfig c;
  c.function_key = "sws+lorentzian";
  c.function_params.p = 0.5;
  c.filters = {FilterSpec::euler()};
  c.xs = {pi / 12};
  c.n_min = 4;
  c.n_max = 200;
  return c;
}

TEST(CompareFilters, SmoothFiltersBeatEuler) {
  const auto cmp = gibbs::compare_filters(fig8_config());
  ASSERT_EQ(cmp.traces.size(), 4u);
  for (const auto& t : cmp.traces) ASSERT_TRUE(t.fit.has_value()) << t.filter.name();
  const double q_euler = cmp.traces[0].fit->rate;
  const double q_erfc = cmp.traces[1].fit->rate;
  const double q_hdaf = cmp.traces[2].fit->rate;
  EXPECT_GT(q_euler, 0.0);
  EXPECT_GT(q_erfc, q_euler);
  EXPECT_GT(q_hdaf, q_euler);
  EXPECT_LT(std::abs(cmp.traces[3].fit->rate), 0.005);
  // Past a crossover Erfc-Log stays below Euler.
  std::size_t k = cmp.rows.size();
  while (k > 0 && cmp.rows[k - 1].err_erfclog < cmp.rows[k - 1].err_euler) --k;
  EXPECT_LT(k, cmp.rows.size() / 2);
}

TEST(CompareFilters, HdafTrailsErfcLogFarFromJump) {
  auto c = fig8_config();
  c.xs = {5 * pi / 8};
  c.n_max = 120;
  const auto cmp = gibbs::compare_filters(c);
  ASSERT_TRUE(cmp.traces[1].fit && cmp.traces[2].fit);
  EXPECT_LE(cmp.traces[2].fit->rate, cmp.traces[1].fit->rate);
}

}  // namespace
