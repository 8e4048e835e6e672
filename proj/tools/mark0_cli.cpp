// mark0 command-line front end.
//
//   mark0 run            --config cfg [--seed N] [--out DIR] [--set k=v]...
//   mark0 dashboard      same inputs; prints the summary, writes summary.json
//   mark0 phillips       scatter + OLS fit of the measurement window
//   mark0 sweep          grid over one or two axes from the config
//   mark0 phase-diagram  sweep with the standard (rho_star, R) axes preset
//
// Exit codes: 0 success, 2 configuration error, 3 run halted early (outputs
// are still written), 1 anything else.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mark0/config.hpp"
#include "mark0/economy.hpp"
#include "mark0/io.hpp"
#include "mark0/log.hpp"
#include "mark0/measure.hpp"
#include "mark0/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitHalted = 3;

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::vector<std::string> sets;
  std::optional<int> workers;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "configuration file (key=value text or JSON)");
  cmd->add_option("--seed", args.seed, "override the run seed");
  cmd->add_option("--out", args.out_dir, "output directory");
  cmd->add_option("--set", args.sets, "override one config key, k=v (repeatable)");
  cmd->add_option("--workers", args.workers, "worker threads for sweeps");
}

// File first, then --set in order, then the dedicated flags, so the specific
// always beats the general.
mark0::RunConfig build_config(const CommonArgs& args) {
  mark0::RunConfig cfg;
  if (!args.config_path.empty()) cfg = mark0::load_config_file(args.config_path);
  for (const std::string& kv : args.sets) mark0::config_set_pair(cfg, kv);
  if (args.seed) cfg.seed = *args.seed;
  if (args.out_dir) cfg.out_dir = *args.out_dir;
  if (args.workers) cfg.workers = *args.workers;
  if (mark0::config_needs_normalization(cfg))
    mark0::log_warn("phi_pi = 0 turns the policy reaction off; tau_T and pi_star are ignored");
  return cfg;
}

std::filesystem::path out_path(const mark0::RunConfig& cfg, const char* name) {
  return std::filesystem::path(cfg.out_dir) / name;
}

struct RunOutputs {
  mark0::RunConfig cfg;
  mark0::TimeSeries ts;
  mark0::Dashboard dash;
  mark0::PhaseLabel label = mark0::PhaseLabel::Indeterminate;
};

RunOutputs simulate(const CommonArgs& args) {
  RunOutputs out;
  out.cfg = build_config(args);
  const mark0::ModelParams params = mark0::to_model_params(out.cfg);
  out.ts = mark0::run(params);
  out.dash = mark0::dashboard(out.ts);
  out.label = mark0::classify_phase(out.ts, mark0::to_thresholds(out.cfg));
  if (out.ts.halt != mark0::HaltReason::None)
    mark0::log_warn(std::string("run halted at step ") + std::to_string(out.ts.halt_step) + ": " +
                    mark0::to_string(out.ts.halt));
  return out;
}

int finish(const RunOutputs& out) {
  return out.ts.halt == mark0::HaltReason::None ? kExitOk : kExitHalted;
}

int cmd_run(const CommonArgs& args) {
  const RunOutputs out = simulate(args);
  mark0::write_file_atomic(out_path(out.cfg, "trajectory.csv"), mark0::trajectory_csv(out.ts));
  mark0::write_file_atomic(out_path(out.cfg, "summary.json"),
                           mark0::summary_json(out.cfg, out.ts, out.dash, out.label));
  mark0::log_info("wrote trajectory.csv and summary.json to " + out.cfg.out_dir);
  return finish(out);
}

int cmd_dashboard(const CommonArgs& args) {
  const RunOutputs out = simulate(args);
  const std::string summary = mark0::summary_json(out.cfg, out.ts, out.dash, out.label);
  mark0::write_file_atomic(out_path(out.cfg, "summary.json"), summary);
  std::fputs(summary.c_str(), stdout);
  return finish(out);
}

int cmd_phillips(const CommonArgs& args) {
  const RunOutputs out = simulate(args);
  const std::vector<mark0::PhillipsPoint> pts =
      mark0::phillips_points(out.ts, out.cfg.phillips_stride);
  const mark0::OlsFit fit = mark0::ols_fit(pts);
  mark0::write_file_atomic(out_path(out.cfg, "phillips_points.csv"), mark0::phillips_csv(pts));
  mark0::write_file_atomic(out_path(out.cfg, "phillips_fit.json"),
                           mark0::phillips_fit_json(fit, out.cfg));
  mark0::log_info("phillips fit: slope " + mark0::fmt_double(fit.slope) + " over " +
                  std::to_string(fit.n) + " points");
  return finish(out);
}

int run_grid(const mark0::RunConfig& cfg) {
  const mark0::SweepSpec spec = mark0::to_sweep_spec(cfg);
  const mark0::SweepResult res = mark0::run_sweep(spec, cfg.workers);
  mark0::write_file_atomic(out_path(cfg, "sweep_runs.csv"), mark0::sweep_runs_csv(res));
  mark0::write_file_atomic(out_path(cfg, "sweep_grid.csv"), mark0::sweep_grid_csv(res));
  mark0::log_info("wrote sweep_runs.csv and sweep_grid.csv to " + cfg.out_dir);
  return kExitOk;
}

int cmd_sweep(const CommonArgs& args) { return run_grid(build_config(args)); }

// The standard phase-diagram axes: baseline rate 0.25..5 %/yr in quarter-point
// steps against hiring/firing ratio 0.1..2.0; both only when the config does
// not choose its own axes.
int cmd_phase_diagram(const CommonArgs& args) {
  mark0::RunConfig cfg = build_config(args);
  if (!cfg.sweep_param1) {
    cfg.sweep_param1 = "rho_star_annual";
    cfg.sweep_values1.clear();
    for (int k = 1; k <= 20; ++k) cfg.sweep_values1.push_back(0.25 * k);
  }
  if (!cfg.sweep_param2) {
    cfg.sweep_param2 = "ratio_R";
    cfg.sweep_values2.clear();
    for (int k = 1; k <= 20; ++k) cfg.sweep_values2.push_back(0.1 * k);
  }
  return run_grid(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mark-0 macroeconomy simulator"};
  app.require_subcommand(1);

  CommonArgs args;
  CLI::App* run = app.add_subcommand("run", "simulate; write trajectory.csv and summary.json");
  CLI::App* dash = app.add_subcommand("dashboard", "simulate; print and write the summary");
  CLI::App* phil = app.add_subcommand("phillips", "simulate; write the Phillips scatter and fit");
  CLI::App* sweep = app.add_subcommand("sweep", "run the configured parameter grid");
  CLI::App* phase = app.add_subcommand("phase-diagram", "sweep the standard (rate, R) grid");
  for (CLI::App* cmd : {run, dash, phil, sweep, phase}) add_common(cmd, args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(args);
    if (dash->parsed()) return cmd_dashboard(args);
    if (phil->parsed()) return cmd_phillips(args);
    if (sweep->parsed()) return cmd_sweep(args);
    if (phase->parsed()) return cmd_phase_diagram(args);
  } catch (const mark0::ConfigError& e) {
    mark0::log_error(e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    mark0::log_error(e.what());
    return kExitFailure;
  }
  return kExitFailure;
}
