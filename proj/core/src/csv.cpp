#include "gibbs/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

std::string dominating_name(const RatePrediction& p) {
  if (p.at_singularity) return "singular";
  switch (p.dominating) {
    case DominantTerm::Metric:
      return "metric";
    case DominantTerm::RealSingularity:
      return "real";
    case DominantTerm::OffAxis:
      return "offaxis" + std::to_string(p.off_axis_index.value_or(0) + 1);
  }
  return "unknown";
}

void write_config_echo(std::ostream& out, const ExperimentConfig& config) {
  out << "# fn=" << config.function_key << '\n';
  const auto& p = config.function_params;
  if (p.p) out << "# p=" << format_double(*p.p) << '\n';
  if (p.tau) out << "# tau=" << format_double(*p.tau) << '\n';
  out << "# phi=" << format_double(p.phi) << '\n';
  out << "# n_min=" << config.n_min << '\n';
  out << "# n_max=" << config.n_max << '\n';
  out << "# n_stride=" << config.n_stride << '\n';
  if (config.saturation_floor) {
    out << "# saturation_floor=" << format_double(*config.saturation_floor) << '\n';
  } else {
    out << "# saturation_factor=" << format_double(config.saturation_factor) << '\n';
  }
}

void write_fit_line(std::ostream& out, const ErrorTrace& trace, double q_pred) {
  out << "# fit x=" << format_double(trace.x) << " filter=" << trace.filter.name();
  if (trace.fit) {
    out << " A=" << format_double(trace.fit->prefactor) << " q_hat=" << format_double(trace.fit->rate)
        << " A_ls=" << format_double(trace.fit->ls_prefactor) << " points=" << trace.fit->points;
  } else {
    out << " insufficient_data";
  }
  out << " q_pred=" << format_double(q_pred) << '\n';
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  if (s == "nan") return NAN;
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError("malformed number '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError("malformed integer '" + s + "'");
  return v;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& out, const ExperimentConfig& config,
                     const std::vector<ErrorTrace>& traces) {
  out << "# gibbsaccel sweep\n";
  write_config_echo(out, config);
  out << "x,filter,N,error,floor,saturated,envelope\n";
  for (const auto& trace : traces) {
    std::size_t next_env = 0;
    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
      const bool on_env = next_env < trace.envelope.size() && trace.envelope[next_env] == i;
      if (on_env) ++next_env;
      const auto& r = trace.rows[i];
      out << format_double(trace.x) << ',' << trace.filter.name() << ',' << r.n << ','
          << format_double(r.error) << ',' << format_double(r.floor) << ',' << (r.saturated ? 1 : 0)
          << ',' << (on_env ? 1 : 0) << '\n';
    }
  }
  for (const auto& trace : traces) {
    write_fit_line(out, trace, predicted_rate(config.function_key, trace.x, config.function_params));
  }
}

void write_rho_csv(std::ostream& out, const std::string& function_key,
                   const std::vector<RhoBlock>& blocks) {
  out << "# gibbsaccel rho\n# fn=" << function_key << '\n';
  if (blocks.empty() || blocks.front().rows.empty()) return;
  const auto& first = blocks.front().rows.front();
  const bool family = blocks.front().tau.has_value();
  if (family) out << "tau,";
  out << "x,rho,q,dominating";
  if (first.zeta_real) out << ",zeta_real";
  for (std::size_t j = 0; j < first.zeta_off_axis.size(); ++j) out << ",zeta_" << j + 1;
  if (first.rho_raw) out << ",rho_raw,penalized";
  out << '\n';
  for (const auto& block : blocks) {
    for (const auto& row : block.rows) {
      if (family) out << format_double(block.tau.value_or(NAN)) << ',';
      out << format_double(row.x) << ',' << format_double(row.prediction.rho) << ','
          << format_double(row.prediction.q) << ',' << dominating_name(row.prediction);
      if (first.zeta_real) out << ',' << format_double(row.zeta_real.value_or(NAN));
      for (const double z : row.zeta_off_axis) out << ',' << format_double(z);
      if (first.rho_raw) {
        out << ',' << format_double(row.rho_raw.value_or(NAN)) << ','
            << (row.penalized.value_or(false) ? 1 : 0);
      }
      out << '\n';
    }
    if (block.rows.front().rho_raw) {
      std::size_t flagged = 0;
      double rho_min = INFINITY;
      for (const auto& row : block.rows) {
        flagged += row.penalized.value_or(false) ? 1 : 0;
        rho_min = std::min(rho_min, row.prediction.rho);
      }
      out << "# penalty";
      if (block.tau) out << " tau=" << format_double(*block.tau);
      out << " flagged=" << flagged << " rho_min=" << format_double(rho_min) << '\n';
    }
  }
}

void write_compare_csv(std::ostream& out, const ExperimentConfig& config,
                       const FilterComparison& comparison) {
  out << "# gibbsaccel compare\n";
  write_config_echo(out, config);
  out << "# x=" << format_double(comparison.x) << '\n';
  out << "N,err_euler,err_erfclog,err_hdaf,err_identity\n";
  for (const auto& r : comparison.rows) {
    out << r.n << ',' << format_double(r.err_euler) << ',' << format_double(r.err_erfclog) << ','
        << format_double(r.err_hdaf) << ',' << format_double(r.err_identity) << '\n';
  }
  const double q_pred = predicted_rate(config.function_key, comparison.x, config.function_params);
  for (const auto& trace : comparison.traces) write_fit_line(out, trace, q_pred);
}

void write_weights_csv(std::ostream& out, const FilterSpec& filter, int M, double x_dist) {
  if (M < 1) throw ConfigError("weights need M >= 1");
  out << "# gibbsaccel weights filter=" << filter.name() << " M=" << M << '\n';
  if (filter.kind() == FilterKind::Euler) {
    const EulerWeightTable table(M);
    out << "j,theta,mu,sigma\n";
    for (int j = 0; j <= M + 1; ++j) {
      out << j << ',' << format_double(static_cast<double>(j) / (M + 1)) << ','
          << (j <= M ? format_double(table.mu(j)) : std::string()) << ','
          << format_double(table.sigma(j)) << '\n';
    }
    return;
  }
  const auto w = filter.weights(M, x_dist);
  out << "j,theta,sigma\n";
  for (int j = 0; j <= M; ++j) {
    out << j << ',' << format_double(static_cast<double>(j) / M) << ',' << format_double(w[j]) << '\n';
  }
}

SweepFile read_sweep_csv(std::istream& in) {
  SweepFile file;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (header_seen) continue;  // footer (fit lines) is recomputed by callers
      const auto body = line.substr(line.find_first_not_of("# "));
      const auto eq = body.find('=');
      if (eq != std::string::npos && body.find(' ') == std::string::npos) {
        file.metadata[body.substr(0, eq)] = body.substr(eq + 1);
      }
      continue;
    }
    if (!header_seen) {
      if (line != "x,filter,N,error,floor,saturated,envelope") {
        throw ConfigError("not a sweep CSV (unexpected header '" + line + "')");
      }
      header_seen = true;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 7) throw ConfigError("sweep row with " + std::to_string(cells.size()) + " cells");
    const double x = parse_double(cells[0]);
    FilterSpec filter = FilterSpec::identity();
    try {
      filter = FilterSpec::parse(cells[1]);
    } catch (const ArgumentError& e) {
      throw ConfigError(e.what());
    }
    if (file.traces.empty() || file.traces.back().x != x || !(file.traces.back().filter == filter)) {
      ErrorTrace t;
      t.x = x;
      t.filter = filter;
      file.traces.push_back(std::move(t));
    }
    auto& trace = file.traces.back();
    TraceRow row{parse_int(cells[2]), parse_double(cells[3]), parse_double(cells[4]),
                 cells[5] == "1"};
    if (cells[6] == "1") trace.envelope.push_back(trace.rows.size());
    trace.rows.push_back(row);
  }
  if (!header_seen) throw ConfigError("sweep CSV has no header row");
  return file;
}

}  // namespace gibbs
