#include "cli_app.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "gibbs/csv.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/experiment.hpp"

namespace gibbs::cli {

namespace {

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number '" + s + "'");
  }
  if (used != s.size()) throw ConfigError("cannot parse number '" + s + "'");
  return v;
}

struct FunctionOptions {
  std::optional<double> p;
  std::optional<double> tau;
  std::string phi = "pi";

  TestFunctionParams params() const {
    TestFunctionParams out;
    out.p = p;
    out.tau = tau;
    out.phi = parse_angle(phi);
    return out;
  }
};

void add_function_options(CLI::App* cmd, FunctionOptions& opts) {
  cmd->add_option("--p", opts.p, "Lorentzian parameter p in (0,1)");
  cmd->add_option("--tau", opts.tau, "Lorentzian pole depth (p = exp(-tau))");
  cmd->add_option("--phi", opts.phi, "Lorentzian phase (radians; accepts e.g. pi, 5pi/8)");
}

// Writes to `path` or to `out` when path is empty or "-".
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open '" + path + "' for writing");
  write(file);
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '*') s += c;
  }
  if (s.empty()) throw ConfigError("empty angle");
  double den = 1.0;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    den = parse_number(s.substr(slash + 1));
    if (den == 0.0) throw ConfigError("zero denominator in '" + text + "'");
    s = s.substr(0, slash);
  }
  double num = 0.0;
  if (const auto pi = s.find("pi"); pi != std::string::npos) {
    if (pi + 2 != s.size()) throw ConfigError("cannot parse angle '" + text + "'");
    const std::string coeff = s.substr(0, pi);
    const double c = coeff.empty() || coeff == "+" ? 1.0 : coeff == "-" ? -1.0 : parse_number(coeff);
    num = c * std::numbers::pi;
  } else {
    num = parse_number(s);
  }
  return num / den;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler, Erfc-Log and HDAF acceleration of Fourier series with Gibbs phenomenon"};
  app.name("gibbs");
  app.require_subcommand(1);

  // weights
  auto* weights = app.add_subcommand("weights", "Print filter weights");
  std::string weights_filter = "euler";
  int weights_m = 8;
  std::string weights_dist = "pi";
  std::string weights_out;
  weights->add_option("--filter", weights_filter, "euler | erfclog | hdaf | identity");
  weights->add_option("--M", weights_m, "Euler order M (N for the other filters)")->required();
  weights->add_option("--dist", weights_dist, "Distance to the singularity (adaptive filters)");
  weights->add_option("--out", weights_out, "Output CSV path (default stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Error trace |f(x) - f_N(x)| over a range of N");
  std::string sweep_fn;
  std::vector<std::string> sweep_filters;
  std::vector<std::string> sweep_xs;
  int sweep_nmin = 1, sweep_nmax = 60, sweep_stride = 1;
  double sweep_sat_factor = 100.0;
  std::optional<double> sweep_sat_floor;
  std::string sweep_out;
  FunctionOptions sweep_fopts;
  sweep->add_option("--fn", sweep_fn, "sws | delta | lorentzian | sws+lorentzian | log2")->required();
  sweep->add_option("--filter", sweep_filters, "Filter kind (repeatable)")->required()->delimiter(',');
  sweep->add_option("--x", sweep_xs, "Evaluation point in radians (repeatable)")->required();
  sweep->add_option("--n-min", sweep_nmin, "Smallest truncation N");
  sweep->add_option("--n-max", sweep_nmax, "Largest truncation N");
  sweep->add_option("--stride", sweep_stride, "Step in N");
  sweep->add_option("--saturation-factor", sweep_sat_factor, "Floor = factor * eps * sum|c_n|");
  sweep->add_option("--saturation-floor", sweep_sat_floor, "Absolute saturation floor");
  sweep->add_option("--out", sweep_out, "Output CSV path (default stdout)");
  add_function_options(sweep, sweep_fopts);

  // rho
  auto* rho = app.add_subcommand("rho", "Predicted convergence factor rho(x) on [-pi, pi]");
  std::string rho_fn;
  int rho_resolution = 361;
  std::vector<double> rho_taus;
  std::string rho_out;
  FunctionOptions rho_fopts;
  rho->add_option("--fn", rho_fn, "Test function key")->required();
  rho->add_option("--resolution", rho_resolution, "Grid points (ends included)");
  rho->add_option("--tau-family", rho_taus, "Emit one curve per tau (e.g. 0.1,0.2,0.5,1)")
      ->delimiter(',');
  rho->add_option("--out", rho_out, "Output CSV path (default stdout)");
  add_function_options(rho, rho_fopts);

  // compare
  auto* compare = app.add_subcommand("compare", "Euler vs Erfc-Log vs HDAF errors at one x");
  std::string cmp_fn, cmp_x, cmp_out;
  int cmp_nmin = 4, cmp_nmax = 200, cmp_stride = 1;
  FunctionOptions cmp_fopts;
  compare->add_option("--fn", cmp_fn, "Test function key")->required();
  compare->add_option("--x", cmp_x, "Evaluation point in radians")->required();
  compare->add_option("--n-min", cmp_nmin, "Smallest truncation N");
  compare->add_option("--n-max", cmp_nmax, "Largest truncation N");
  compare->add_option("--stride", cmp_stride, "Step in N");
  compare->add_option("--out", cmp_out, "Output CSV path (default stdout)");
  add_function_options(compare, cmp_fopts);

  // envelope
  auto* envelope = app.add_subcommand("envelope", "Fit A exp(-q N)/N to a sweep CSV");
  std::string env_in;
  envelope->add_option("--in", env_in, "Sweep CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*weights) {
      const auto filter = FilterSpec::parse(weights_filter);
      const double dist = parse_angle(weights_dist);
      emit(weights_out, out, [&](std::ostream& os) { write_weights_csv(os, filter, weights_m, dist); });
      return kExitOk;
    }

    if (*sweep) {
      ExperimentConfig cfg;
      cfg.function_key = sweep_fn;
      cfg.function_params = sweep_fopts.params();
      for (const auto& f : sweep_filters) cfg.filters.push_back(FilterSpec::parse(f));
      for (const auto& x : sweep_xs) cfg.xs.push_back(parse_angle(x));
      cfg.n_min = sweep_nmin;
      cfg.n_max = sweep_nmax;
      cfg.n_stride = sweep_stride;
      cfg.saturation_factor = sweep_sat_factor;
      cfg.saturation_floor = sweep_sat_floor;
      const auto traces = sweep_errors(cfg);
      emit(sweep_out, out, [&](std::ostream& os) { write_sweep_csv(os, cfg, traces); });
      return kExitOk;
    }

    if (*rho) {
      std::vector<RhoBlock> blocks;
      if (rho_taus.empty()) {
        blocks.push_back({std::nullopt, rho_curve(rho_fn, rho_resolution, rho_fopts.params())});
      } else {
        for (const double tau : rho_taus) {
          auto params = rho_fopts.params();
          params.tau = tau;
          blocks.push_back({tau, rho_curve(rho_fn, rho_resolution, params)});
        }
      }
      emit(rho_out, out, [&](std::ostream& os) { write_rho_csv(os, rho_fn, blocks); });
      return kExitOk;
    }

    if (*compare) {
      ExperimentConfig cfg;
      cfg.function_key = cmp_fn;
      cfg.function_params = cmp_fopts.params();
      cfg.filters = {FilterSpec::euler()};
      cfg.xs = {parse_angle(cmp_x)};
      cfg.n_min = cmp_nmin;
      cfg.n_max = cmp_nmax;
      cfg.n_stride = cmp_stride;
      const auto result = compare_filters(cfg);
      emit(cmp_out, out, [&](std::ostream& os) { write_compare_csv(os, cfg, result); });
      return kExitOk;
    }

    if (*envelope) {
      std::ifstream file(env_in, std::ios::binary);
      if (!file) throw ConfigError("cannot open '" + env_in + "'");
      const auto sweep_file = read_sweep_csv(file);
      const auto fn_it = sweep_file.metadata.find("fn");
      if (fn_it == sweep_file.metadata.end()) throw ConfigError("sweep CSV lacks '# fn=' metadata");
      TestFunctionParams params;
      if (auto it = sweep_file.metadata.find("p"); it != sweep_file.metadata.end()) params.p = parse_number(it->second);
      if (auto it = sweep_file.metadata.find("tau"); it != sweep_file.metadata.end()) params.tau = parse_number(it->second);
      if (auto it = sweep_file.metadata.find("phi"); it != sweep_file.metadata.end()) params.phi = parse_number(it->second);
      if (sweep_file.traces.empty()) throw InsufficientDataError("sweep CSV has no rows");

      bool insufficient = false;
      out << std::setprecision(6);
      for (const auto& trace : sweep_file.traces) {
        const double q_pred = predicted_rate(fn_it->second, trace.x, params);
        out << "x=" << format_double(trace.x) << " filter=" << trace.filter.name();
        try {
          const auto fit = fit_envelope(trace);
          const double gap = q_pred != 0.0 ? std::abs(fit.rate - q_pred) / q_pred : NAN;
          out << " A=" << fit.prefactor << " q_hat=" << fit.rate << " q_pred=" << q_pred
              << " rel_gap=" << gap << " points=" << fit.points << '\n';
        } catch (const InsufficientDataError& e) {
          insufficient = true;
          out << " insufficient data: " << e.what() << '\n';
        }
      }
      return insufficient ? kExitInsufficientData : kExitOk;
    }
  } catch (const InsufficientDataError& e) {
    err << "gibbs: " << e.what() << '\n';
    return kExitInsufficientData;
  } catch (const Error& e) {
    err << "gibbs: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace gibbs::cli
