#pragma once
// Run configuration: a flat key = value text format (# comments allowed) with
// an equivalent JSON object form. Values keep their user-facing units (%/yr
// for the two rate keys); conversion to per-step model units happens only
// when building ModelParams. Unknown keys are rejected so typos cannot
// silently fall back to defaults. The six structurally varied parameters have
// no defaults and must be given explicitly.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "format.hpp"
#include "measure.hpp"
#include "params.hpp"
#include "sweep.hpp"

namespace mark0 {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
  // model, with the standard defaults
  int n_firms = 10000;
  double c0 = 0.5;
  double beta = 2.0;
  double gamma = 0.1;
  double eta0_minus = 0.2;
  double delta = 0.02;
  double theta = 3.0;
  double phi_revival = 0.1;
  double f_share = 0.5;
  double alpha_c = 4.0;
  double alpha_gamma = 50.0;
  double gamma0 = 0.0;
  double omega = 0.2;
  double g_index = 1.0;
  // structurally varied: required, no defaults
  std::optional<double> ratio_R;
  std::optional<double> tau_R;
  std::optional<double> tau_T;
  std::optional<double> phi_pi;
  std::optional<double> pi_star_annual;   // %/yr
  std::optional<double> rho_star_annual;  // %/yr
  // run shape
  int T = 10000;
  int T_eq = 5000;
  std::uint64_t seed = 1;
  double steps_per_year = 2.0;
  bool zlb_enabled = false;
  double collapse_guard = 1e150;
  // output and execution
  std::string out_dir = ".";
  int workers = 0;  // 0 picks the hardware count
  int phillips_stride = 10;
  // phase thresholds
  double phase_u_hiho = 0.10;
  double phase_u_lilo = 0.20;
  double phase_pi_hiho_annual = 0.5;
  double phase_hyper_annual = 50.0;
  double coexist_min_freq = 0.1;
  // sweep axes
  std::optional<std::string> sweep_param1;
  std::vector<double> sweep_values1;
  std::optional<std::string> sweep_param2;
  std::vector<double> sweep_values2;
  int sweep_seeds = 8;
  double init_perturbation = 1.0;

  bool operator==(const RunConfig&) const = default;
};

namespace detail {

inline std::vector<double> parse_double_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  std::string_view rest = value;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view tok = trim(rest.substr(0, comma));
    double v = 0;
    if (tok.empty() || !parse_double(tok, v))
      throw ConfigError("config: key '" + std::string(key) + "' expects a comma-separated number list");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty())
    throw ConfigError("config: key '" + std::string(key) + "' expects a comma-separated number list");
  return out;
}

inline std::string join_doubles(const std::vector<double>& vals) {
  std::string s;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) s += ',';
    s += fmt_double(vals[i]);
  }
  return s;
}

}  // namespace detail

// Apply one key = value pair; this is the single dispatch point shared by the
// text parser, the JSON parser and --set overrides.
inline void config_set(RunConfig& c, std::string_view key, std::string_view value) {
  auto want_double = [&](double& slot) {
    double v = 0;
    if (!parse_double(value, v))
      throw ConfigError("config: key '" + std::string(key) + "' expects a number, got '" +
                        std::string(value) + "'");
    slot = v;
  };
  auto want_opt_double = [&](std::optional<double>& slot) {
    double v = 0;
    if (!parse_double(value, v))
      throw ConfigError("config: key '" + std::string(key) + "' expects a number, got '" +
                        std::string(value) + "'");
    slot = v;
  };
  auto want_int = [&](int& slot) {
    long long v = 0;
    if (!parse_int64(value, v) || v < -2147483648LL || v > 2147483647LL)
      throw ConfigError("config: key '" + std::string(key) + "' expects an integer, got '" +
                        std::string(value) + "'");
    slot = static_cast<int>(v);
  };
  auto want_bool = [&](bool& slot) {
    if (value == "true") slot = true;
    else if (value == "false") slot = false;
    else
      throw ConfigError("config: key '" + std::string(key) + "' expects true or false, got '" +
                        std::string(value) + "'");
  };

  if (key == "n_firms") want_int(c.n_firms);
  else if (key == "c0") want_double(c.c0);
  else if (key == "beta") want_double(c.beta);
  else if (key == "gamma") want_double(c.gamma);
  else if (key == "eta0_minus") want_double(c.eta0_minus);
  else if (key == "ratio_R") want_opt_double(c.ratio_R);
  else if (key == "delta") want_double(c.delta);
  else if (key == "theta") want_double(c.theta);
  else if (key == "phi_revival") want_double(c.phi_revival);
  else if (key == "f_share") want_double(c.f_share);
  else if (key == "alpha_c") want_double(c.alpha_c);
  else if (key == "alpha_gamma") want_double(c.alpha_gamma);
  else if (key == "gamma0") want_double(c.gamma0);
  else if (key == "omega") want_double(c.omega);
  else if (key == "g_index") want_double(c.g_index);
  else if (key == "tau_R") want_opt_double(c.tau_R);
  else if (key == "tau_T") want_opt_double(c.tau_T);
  else if (key == "phi_pi") want_opt_double(c.phi_pi);
  else if (key == "pi_star_annual") want_opt_double(c.pi_star_annual);
  else if (key == "rho_star_annual") want_opt_double(c.rho_star_annual);
  else if (key == "T") want_int(c.T);
  else if (key == "T_eq") want_int(c.T_eq);
  else if (key == "seed") {
    unsigned long long v = 0;
    if (!parse_uint64(value, v))
      throw ConfigError("config: key 'seed' expects a non-negative integer, got '" +
                        std::string(value) + "'");
    c.seed = v;
  } else if (key == "steps_per_year") want_double(c.steps_per_year);
  else if (key == "zlb_enabled") want_bool(c.zlb_enabled);
  else if (key == "collapse_guard") want_double(c.collapse_guard);
  else if (key == "out_dir") c.out_dir = std::string(value);
  else if (key == "workers") want_int(c.workers);
  else if (key == "phillips_stride") want_int(c.phillips_stride);
  else if (key == "phase_u_hiho") want_double(c.phase_u_hiho);
  else if (key == "phase_u_lilo") want_double(c.phase_u_lilo);
  else if (key == "phase_pi_hiho_annual") want_double(c.phase_pi_hiho_annual);
  else if (key == "phase_hyper_annual") want_double(c.phase_hyper_annual);
  else if (key == "coexist_min_freq") want_double(c.coexist_min_freq);
  else if (key == "sweep_param1") c.sweep_param1 = std::string(value);
  else if (key == "sweep_values1") c.sweep_values1 = detail::parse_double_list(key, value);
  else if (key == "sweep_param2") c.sweep_param2 = std::string(value);
  else if (key == "sweep_values2") c.sweep_values2 = detail::parse_double_list(key, value);
  else if (key == "sweep_seeds") want_int(c.sweep_seeds);
  else if (key == "init_perturbation") want_double(c.init_perturbation);
  else throw ConfigError("config: unknown key '" + std::string(key) + "'");
}

// key=value form, exactly as accepted in config files and --set overrides
inline void config_set_pair(RunConfig& c, std::string_view line) {
  const std::size_t eq = line.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError("config: expected key=value, got '" + std::string(line) + "'");
  const std::string_view key = trim(line.substr(0, eq));
  const std::string_view value = trim(line.substr(eq + 1));
  if (key.empty()) throw ConfigError("config: empty key in '" + std::string(line) + "'");
  config_set(c, key, value);
}

inline RunConfig parse_config_text(std::string_view text) {
  RunConfig c;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      config_set_pair(c, line);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(e.what()) + " (line " + fmt_int(line_no) + ")");
    }
  }
  return c;
}

// JSON object with the same keys; numbers, bools, strings and number arrays.
// Every value funnels through config_set so both formats behave identically.
inline RunConfig parse_config_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: JSON root must be an object");
  RunConfig c;
  for (const auto& [key, val] : j.items()) {
    std::string as_text;
    if (val.is_string()) as_text = val.get<std::string>();
    else if (val.is_boolean()) as_text = val.get<bool>() ? "true" : "false";
    else if (val.is_number_unsigned()) as_text = fmt_uint(val.get<unsigned long long>());
    else if (val.is_number_integer()) as_text = fmt_int(val.get<long long>());
    else if (val.is_number_float()) as_text = fmt_double(val.get<double>());
    else if (val.is_array()) {
      std::vector<double> vals;
      for (const auto& item : val) {
        if (!item.is_number()) throw ConfigError("config: key '" + key + "' array must hold numbers");
        vals.push_back(item.get<double>());
      }
      as_text = detail::join_doubles(vals);
    } else {
      throw ConfigError("config: key '" + key + "' has an unsupported JSON type");
    }
    config_set(c, key, as_text);
  }
  return c;
}

inline RunConfig parse_config(std::string_view text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') return parse_config_json(text);
    break;
  }
  return parse_config_text(text);
}

inline RunConfig load_config_file(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (path.extension() == ".json") return parse_config_json(text);
  return parse_config(text);
}

// Canonical text emission: fixed key order, shortest round-trip floats,
// unset keys omitted. parse(emit(c)) == c holds exactly.
inline std::string emit_config(const RunConfig& c) {
  std::string s;
  auto put = [&s](std::string_view key, const std::string& value) {
    s += key;
    s += " = ";
    s += value;
    s += '\n';
  };
  auto put_opt = [&put](std::string_view key, const std::optional<double>& v) {
    if (v) put(key, fmt_double(*v));
  };
  put("n_firms", fmt_int(c.n_firms));
  put("c0", fmt_double(c.c0));
  put("beta", fmt_double(c.beta));
  put("gamma", fmt_double(c.gamma));
  put("eta0_minus", fmt_double(c.eta0_minus));
  put_opt("ratio_R", c.ratio_R);
  put("delta", fmt_double(c.delta));
  put("theta", fmt_double(c.theta));
  put("phi_revival", fmt_double(c.phi_revival));
  put("f_share", fmt_double(c.f_share));
  put("alpha_c", fmt_double(c.alpha_c));
  put("alpha_gamma", fmt_double(c.alpha_gamma));
  put("gamma0", fmt_double(c.gamma0));
  put("omega", fmt_double(c.omega));
  put("g_index", fmt_double(c.g_index));
  put_opt("tau_R", c.tau_R);
  put_opt("tau_T", c.tau_T);
  put_opt("phi_pi", c.phi_pi);
  put_opt("pi_star_annual", c.pi_star_annual);
  put_opt("rho_star_annual", c.rho_star_annual);
  put("T", fmt_int(c.T));
  put("T_eq", fmt_int(c.T_eq));
  put("seed", fmt_uint(c.seed));
  put("steps_per_year", fmt_double(c.steps_per_year));
  put("zlb_enabled", c.zlb_enabled ? "true" : "false");
  put("collapse_guard", fmt_double(c.collapse_guard));
  put("out_dir", c.out_dir);
  put("workers", fmt_int(c.workers));
  put("phillips_stride", fmt_int(c.phillips_stride));
  put("phase_u_hiho", fmt_double(c.phase_u_hiho));
  put("phase_u_lilo", fmt_double(c.phase_u_lilo));
  put("phase_pi_hiho_annual", fmt_double(c.phase_pi_hiho_annual));
  put("phase_hyper_annual", fmt_double(c.phase_hyper_annual));
  put("coexist_min_freq", fmt_double(c.coexist_min_freq));
  if (c.sweep_param1) put("sweep_param1", *c.sweep_param1);
  if (!c.sweep_values1.empty()) put("sweep_values1", detail::join_doubles(c.sweep_values1));
  if (c.sweep_param2) put("sweep_param2", *c.sweep_param2);
  if (!c.sweep_values2.empty()) put("sweep_values2", detail::join_doubles(c.sweep_values2));
  put("sweep_seeds", fmt_int(c.sweep_seeds));
  put("init_perturbation", fmt_double(c.init_perturbation));
  return s;
}

// The central bank is off at phi_pi == 0; a nonzero target or target weight
// would then silently do nothing, so it is normalized away (and the CLI says
// so).
inline bool config_needs_normalization(const RunConfig& c) {
  return c.phi_pi && *c.phi_pi == 0.0 &&
         ((c.tau_T && *c.tau_T != 0.0) || (c.pi_star_annual && *c.pi_star_annual != 0.0));
}

inline ModelParams to_model_params(const RunConfig& c) {
  std::vector<std::string> missing;
  if (!c.ratio_R) missing.push_back("ratio_R");
  if (!c.tau_R) missing.push_back("tau_R");
  if (!c.tau_T) missing.push_back("tau_T");
  if (!c.phi_pi) missing.push_back("phi_pi");
  if (!c.pi_star_annual) missing.push_back("pi_star_annual");
  if (!c.rho_star_annual) missing.push_back("rho_star_annual");
  if (!missing.empty()) {
    std::string msg = "config: missing required keys:";
    for (const std::string& k : missing) msg += " " + k;
    throw ConfigError(msg);
  }
  ModelParams p;
  p.n_firms = c.n_firms;
  p.c0 = c.c0;
  p.beta = c.beta;
  p.gamma = c.gamma;
  p.eta0_minus = c.eta0_minus;
  p.ratio_R = *c.ratio_R;
  p.delta = c.delta;
  p.theta = c.theta;
  p.phi_revival = c.phi_revival;
  p.f_share = c.f_share;
  p.alpha_c = c.alpha_c;
  p.alpha_gamma = c.alpha_gamma;
  p.gamma0 = c.gamma0;
  p.omega = c.omega;
  p.g_index = c.g_index;
  p.tau_R = *c.tau_R;
  p.tau_T = *c.tau_T;
  p.phi_pi = *c.phi_pi;
  p.pi_star = deannualize(from_percent(*c.pi_star_annual), c.steps_per_year);
  p.rho_star = deannualize(from_percent(*c.rho_star_annual), c.steps_per_year);
  p.T = c.T;
  p.T_eq = c.T_eq;
  p.seed = c.seed;
  p.steps_per_year = c.steps_per_year;
  p.zlb_enabled = c.zlb_enabled;
  p.collapse_guard = c.collapse_guard;
  p = p.normalized();
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return p;
}

inline PhaseThresholds to_thresholds(const RunConfig& c) {
  PhaseThresholds t;
  t.u_hiho = c.phase_u_hiho;
  t.u_lilo = c.phase_u_lilo;
  t.pi_hiho_annual = c.phase_pi_hiho_annual;
  t.hyper_annual = c.phase_hyper_annual;
  return t;
}

// Sweep seeds count up from the configured base seed.
inline std::vector<std::uint64_t> sweep_seed_list(const RunConfig& c) {
  if (c.sweep_seeds < 1) throw ConfigError("config: sweep_seeds must be >= 1");
  std::vector<std::uint64_t> seeds;
  seeds.reserve(static_cast<std::size_t>(c.sweep_seeds));
  for (int k = 0; k < c.sweep_seeds; ++k) seeds.push_back(c.seed + static_cast<std::uint64_t>(k));
  return seeds;
}

inline SweepSpec to_sweep_spec(const RunConfig& c) {
  SweepSpec spec;
  spec.base = to_model_params(c);
  if (!c.sweep_param1 || c.sweep_values1.empty())
    throw ConfigError("config: sweep needs sweep_param1 and sweep_values1");
  spec.axes.push_back({*c.sweep_param1, c.sweep_values1});
  if (c.sweep_param2 || !c.sweep_values2.empty()) {
    if (!c.sweep_param2 || c.sweep_values2.empty())
      throw ConfigError("config: a second sweep axis needs both sweep_param2 and sweep_values2");
    spec.axes.push_back({*c.sweep_param2, c.sweep_values2});
  }
  for (const SweepAxis& ax : spec.axes) {
    ModelParams probe = spec.base;
    try {
      apply_axis_value(probe, ax.name, ax.values.front());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }
  spec.seeds = sweep_seed_list(c);
  spec.init_perturbation = c.init_perturbation;
  spec.thresholds = to_thresholds(c);
  spec.coexist_min_freq = c.coexist_min_freq;
  return spec;
}

}  // namespace mark0
