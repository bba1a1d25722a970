#ifndef FRACTEL_REPORT_HPP
#define FRACTEL_REPORT_HPP

#include <string>
#include <vector>

#include "fractel/diagnostics.hpp"
#include "fractel/scenario.hpp"

namespace fractel {

struct RunOptions {
  std::string out_dir = ".";
  bool write_svg = true;
  bool quiet = false;
};

/// Everything a completed scenario run produced; the CSV artifacts are
/// rendered from this so repeated runs are byte-identical.
struct RunResult {
  ScenarioConfig config;
  Trajectory trajectory;
  StationaryResult star;
  ConstantChain chain;
  DecayReport decay;
  std::vector<double> g_series;
  std::vector<double> lhs_series;
  std::vector<double> phi_series;
  std::vector<double> i_of_u_series;
  AffirmationCheck affirmation;
  double I_star = 0.0;
};

RunResult execute_scenario(const ScenarioConfig& config);

/// Timeseries CSV, fixed column order:
/// t,E,dissipation,balance_residual,G_functional,phi_half_l2,lhs_decay,
/// bound_theorem,bound_proof_variant,ut_l2sq,I_of_u
std::string render_timeseries_csv(const RunResult& result);

std::string render_report_text(const RunResult& result);
std::string render_energy_svg(const RunResult& result);
std::string render_decay_svg(const RunResult& result);
std::string render_compare_decay_svg(const RunResult& a, const RunResult& b);
std::string render_diff_csv(const RunResult& a, const RunResult& b);

/// CLI entry points. Return the process exit code: 0 success,
/// 1 configuration error, 2 asserted invariant violation at run time.
int run_command(const std::string& config_ref, const RunOptions& opts);
int compare_command(const std::string& config_ref_a,
                    const std::string& config_ref_b, const RunOptions& opts);
int scenarios_command(const std::string& emit_name, bool quiet);

/// Resolves a CLI argument to a scenario: builtin name first, else a path.
ScenarioConfig resolve_scenario(const std::string& config_ref,
                                std::string* stem = nullptr);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace fractel

#endif
