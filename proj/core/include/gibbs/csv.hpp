#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gibbs/experiment.hpp"

namespace gibbs {

/// Shortest decimal that round-trips to the same double; "inf"/"-inf"/"nan".
std::string format_double(double value);

/// Sweep output: `#` comment lines echo the configuration, then
/// `x,filter,N,error,floor,saturated,envelope` rows, then one `# fit` line
/// per trace that has a fit.
void write_sweep_csv(std::ostream& out, const ExperimentConfig& config,
                     const std::vector<ErrorTrace>& traces);

/// Columns: [tau,]x,rho,q,dominating[,zeta_real][,zeta_1..][,rho_raw,penalized].
/// Each block is one curve; `tau` labels blocks of a parameter family.
struct RhoBlock {
  std::optional<double> tau;
  std::vector<RhoCurveRow> rows;
};
void write_rho_csv(std::ostream& out, const std::string& function_key,
                   const std::vector<RhoBlock>& blocks);

/// Columns N,err_euler,err_erfclog,err_hdaf,err_identity plus a `# fit`
/// footer per filter.
void write_compare_csv(std::ostream& out, const ExperimentConfig& config,
                       const FilterComparison& comparison);

/// Euler row: j,theta,mu,sigma with theta = j/(M+1); other kinds: j,theta,sigma.
void write_weights_csv(std::ostream& out, const FilterSpec& filter, int M, double x_dist);

struct SweepFile {
  std::map<std::string, std::string> metadata;  ///< from leading `# key=value` lines
  std::vector<ErrorTrace> traces;               ///< grouped by (x, filter) in file order
};

/// Reads the format written by write_sweep_csv. Throws ConfigError on
/// malformed input.
SweepFile read_sweep_csv(std::istream& in);

}  // namespace gibbs
