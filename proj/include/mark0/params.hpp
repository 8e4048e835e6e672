#pragma once
// Parameters of the Mark-0 macro ABM with a Taylor-rule central bank.
// All rates (rho_star, pi_star) are per-step fractions. The config layer
// converts user-facing %/yr values with the linear steps_per_year scaling.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mark0 {

struct ModelParams {
  int n_firms = 10000;         // N_F: firm count == workforce == money supply
  double c0 = 0.5;             // baseline consumption propensity
  double beta = 2.0;           // intensity of choice (demand and hiring logits)
  double gamma = 0.1;          // wage/price adjustment amplitude
  double eta0_minus = 0.2;     // baseline production-cut rate
  double ratio_R = 1.3;        // hiring/firing asymmetry: eta0_plus = ratio_R * eta0_minus
  double delta = 0.02;         // dividend share of positive cash
  double theta = 3.0;          // default threshold on fragility -E/(W*Y)
  double phi_revival = 0.1;    // per-step revival probability of an inactive firm
  double f_share = 0.5;        // share of defaulted debt charged to borrowers
  double alpha_c = 4.0;        // consumption response to expected real deposit rate
  double alpha_gamma = 50.0;   // loan-burden feedback on the fragility sensitivity
  double gamma0 = 0.0;         // floor of the fragility sensitivity
  double omega = 0.2;          // EMA memory for pi, rho_d, rho_l, u
  double g_index = 1.0;        // wage indexation to expected inflation
  double tau_R = 0.5;          // weight of the realized-inflation EMA in expectations
  double tau_T = 0.0;          // weight of the central-bank target in expectations
  double phi_pi = 0.0;         // Taylor-rule strength; 0 disables the reaction
  double pi_star = 0.0;        // inflation target, per step
  double rho_star = 0.0;       // baseline policy rate, per step
  int T = 10000;               // steps to simulate
  int T_eq = 5000;             // measurement window is (T_eq, T]
  std::uint64_t seed = 1;
  double steps_per_year = 2.0; // one step = 6 months by default
  bool zlb_enabled = false;    // clamp the policy rate at zero when set
  double collapse_guard = 1e150; // halt once p_bar exceeds this (runaway inflation)
  double init_noise = 1.0;     // scale of initial heterogeneity; sweep robustness knob

  double eta0_plus() const { return ratio_R * eta0_minus; }

  // With the central bank switched off the target must not leak into
  // expectations or the policy rate.
  bool needs_normalization() const {
    return phi_pi == 0.0 && (tau_T != 0.0 || pi_star != 0.0);
  }
  ModelParams normalized() const {
    ModelParams q = *this;
    if (q.phi_pi == 0.0) {
      q.tau_T = 0.0;
      q.pi_star = 0.0;
    }
    return q;
  }

  void validate() const;
};

inline void ModelParams::validate() const {
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("ModelParams: " + what);
  };
  if (n_firms < 1) bad("n_firms must be >= 1");
  if (!(c0 >= 0.0 && c0 <= 1.0)) bad("c0 must be in [0,1]");
  if (!(beta >= 0.0)) bad("beta must be >= 0");
  if (!(gamma >= 0.0 && gamma <= 1.0)) bad("gamma must be in [0,1]");
  if (!(eta0_minus >= 0.0 && eta0_minus <= 1.0)) bad("eta0_minus must be in [0,1]");
  if (!(ratio_R >= 0.0)) bad("ratio_R must be >= 0");
  if (!(eta0_plus() <= 1.0)) bad("ratio_R * eta0_minus must be <= 1");
  if (!(delta >= 0.0 && delta <= 1.0)) bad("delta must be in [0,1]");
  if (!(theta > 0.0)) bad("theta must be > 0");
  if (!(phi_revival >= 0.0 && phi_revival <= 1.0)) bad("phi_revival must be in [0,1]");
  if (!(f_share >= 0.0 && f_share <= 1.0)) bad("f_share must be in [0,1]");
  if (!(alpha_c >= 0.0)) bad("alpha_c must be >= 0");
  if (!(alpha_gamma >= 0.0)) bad("alpha_gamma must be >= 0");
  if (!(gamma0 >= 0.0)) bad("gamma0 must be >= 0");
  if (!(omega > 0.0 && omega <= 1.0)) bad("omega must be in (0,1]");
  if (!(g_index >= 0.0)) bad("g_index must be >= 0");
  if (!(tau_R >= 0.0)) bad("tau_R must be >= 0");
  if (!(tau_T >= 0.0)) bad("tau_T must be >= 0");
  if (!(phi_pi >= 0.0)) bad("phi_pi must be >= 0");
  if (T < 1) bad("T must be >= 1");
  if (T_eq < 0 || T_eq >= T) bad("T_eq must satisfy 0 <= T_eq < T");
  if (!(steps_per_year > 0.0)) bad("steps_per_year must be > 0");
  if (!(collapse_guard > 0.0)) bad("collapse_guard must be > 0");
  if (!(init_noise >= 0.0)) bad("init_noise must be >= 0");
}

}  // namespace mark0
