#pragma once
// Result serialization. All emitters build the complete byte string in
// memory (shortest round-trip floats, '\n' line ends, stable column and key
// order) and callers write it atomically, so identical runs produce
// byte-identical files.

#include <nlohmann/json.hpp>

#include <string>

#include "config.hpp"
#include "format.hpp"
#include "measure.hpp"
#include "sweep.hpp"

namespace mark0 {

inline std::string trajectory_csv(const TimeSeries& ts) {
  std::string s =
      "t,p_bar,w_bar,u,pi_step,pi_annual,pi_ema,rho0,rho_l,rho_d,S,C_B,n_defaults,n_active,"
      "money_total\n";
  const double spy = ts.meta.steps_per_year;
  for (const StepRecord& r : ts.records) {
    s += fmt_int(r.t);
    s += ',';
    s += fmt_double(r.p_bar);
    s += ',';
    s += fmt_double(r.w_bar);
    s += ',';
    s += fmt_double(r.u);
    s += ',';
    s += fmt_double(r.pi);
    s += ',';
    s += fmt_double(to_percent(annualize(r.pi, spy)));
    s += ',';
    s += fmt_double(r.pi_ema);
    s += ',';
    s += fmt_double(r.rho0);
    s += ',';
    s += fmt_double(r.rho_l);
    s += ',';
    s += fmt_double(r.rho_d);
    s += ',';
    s += fmt_double(r.S);
    s += ',';
    s += fmt_double(r.C_B);
    s += ',';
    s += fmt_int(r.n_defaults);
    s += ',';
    s += fmt_int(r.n_active);
    s += ',';
    s += fmt_double(r.money_total);
    s += '\n';
  }
  return s;
}

inline std::string phillips_csv(const std::vector<PhillipsPoint>& pts) {
  std::string s = "u,pi_annual\n";
  for (const PhillipsPoint& p : pts) {
    s += fmt_double(p.u);
    s += ',';
    s += fmt_double(p.pi_annual);
    s += '\n';
  }
  return s;
}

inline nlohmann::json halt_json(HaltReason halt, int halt_step) {
  if (halt == HaltReason::None) return nullptr;
  return nlohmann::json{{"reason", to_string(halt)}, {"step", halt_step}};
}

inline nlohmann::json dashboard_json(const Dashboard& d) {
  return nlohmann::json{{"mean_u", d.mean_u},
                        {"mean_pi_annual", d.mean_pi_annual},
                        {"p_neg", d.p_neg},
                        {"mean_real_deposit_annual", d.mean_real_deposit_annual},
                        {"window_steps", d.window_steps},
                        {"window_truncated", d.window_truncated}};
}

// Full effective configuration echoed back, so a summary is reproducible on
// its own.
inline nlohmann::json config_json(const RunConfig& c) {
  nlohmann::json j = nlohmann::json::object();
  // reuse the canonical text form: same keys, same omissions
  const std::string text = emit_config(c);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line(text.data() + pos, (nl == std::string::npos ? text.size() : nl) - pos);
    pos = nl == std::string::npos ? text.size() : nl + 1;
    const std::size_t eq = line.find('=');
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    double num = 0;
    if (key == "out_dir" || key == "sweep_param1" || key == "sweep_param2") j[key] = value;
    else if (value == "true") j[key] = true;
    else if (value == "false") j[key] = false;
    else if (key == "sweep_values1" || key == "sweep_values2")
      j[key] = detail::parse_double_list(key, value);
    else if (key == "seed") j[key] = std::stoull(value);
    else if (parse_double(value, num)) j[key] = num;
    else j[key] = value;
  }
  return j;
}

inline std::string summary_json(const RunConfig& cfg, const TimeSeries& ts, const Dashboard& d,
                                PhaseLabel label) {
  nlohmann::json j{{"config", config_json(cfg)},
                   {"seed", ts.meta.seed},
                   {"dashboard", dashboard_json(d)},
                   {"phase", to_string(label)},
                   {"halt", halt_json(ts.halt, ts.halt_step)}};
  return j.dump(2) + "\n";
}

inline std::string phillips_fit_json(const OlsFit& within, const RunConfig& cfg) {
  nlohmann::json j{{"config", config_json(cfg)},
                   {"slope", within.slope},
                   {"intercept", within.intercept},
                   {"n_points", within.n}};
  return j.dump(2) + "\n";
}

// One row per (point, seed).
inline std::string sweep_runs_csv(const SweepResult& res) {
  std::string s;
  for (const std::string& name : res.axis_names) {
    s += name;
    s += ',';
  }
  s += "seed,label,mean_u,mean_pi_annual,p_neg,real_rate_annual,halt\n";
  for (const PointResult& pt : res.points) {
    for (const CellResult& cell : pt.cells) {
      for (double v : pt.coords) {
        s += fmt_double(v);
        s += ',';
      }
      s += fmt_uint(cell.seed);
      s += ',';
      s += to_string(cell.label);
      s += ',';
      s += fmt_double(cell.dash.mean_u);
      s += ',';
      s += fmt_double(cell.dash.mean_pi_annual);
      s += ',';
      s += fmt_double(cell.dash.p_neg);
      s += ',';
      s += fmt_double(cell.dash.mean_real_deposit_annual);
      s += ',';
      s += to_string(cell.dash.halt);
      s += '\n';
    }
  }
  return s;
}

// One row per grid point with label frequencies and the coexistence flag.
inline std::string sweep_grid_csv(const SweepResult& res) {
  std::string s;
  for (const std::string& name : res.axis_names) {
    s += name;
    s += ',';
  }
  s += "n_seeds";
  for (int i = 0; i < kNumPhaseLabels; ++i) {
    s += ",freq_";
    s += to_string(static_cast<PhaseLabel>(i));
  }
  s += ",majority,coexistence,low_confidence\n";
  for (const PointResult& pt : res.points) {
    for (double v : pt.coords) {
      s += fmt_double(v);
      s += ',';
    }
    const double n = static_cast<double>(pt.cells.size());
    s += fmt_int(static_cast<long long>(pt.cells.size()));
    for (int i = 0; i < kNumPhaseLabels; ++i) {
      s += ',';
      s += fmt_double(n > 0 ? pt.label_counts[i] / n : 0.0);
    }
    s += ',';
    s += to_string(pt.majority);
    s += ',';
    s += pt.coexistence ? "true" : "false";
    s += ',';
    s += pt.low_confidence ? "true" : "false";
    s += '\n';
  }
  return s;
}

}  // namespace mark0
