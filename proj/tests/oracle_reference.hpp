#pragma once
// Straight-line reference simulation used to cross-check the engine.
//
// This file is a deliberately naive, single-function transcription of the
// published update rules: plain arrays, aggregates recomputed from scratch,
// no shared code with the library except the parameter struct. It even keeps
// its own copy of the uniform-draw recipe so a silent change to the library
// RNG shows up as an equivalence failure rather than being absorbed.
//
// Block order per step: start-of-step aggregates; hiring pools; EMA trackers;
// CB policy; firm loop (default check, wage/production/price, indexation);
// refreshed u and mean price; bank rates; household budget; demand allocation;
// accounting with dividends; revivals. Draws: wage then price per surviving
// firm (each only when its branch fires); coin then production per inactive
// firm in the revival pass.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mark0/params.hpp"

namespace oracle {

struct StepRow {
  double p_bar = 0, w_bar = 0, u = 0;
  double pi = 0, pi_ema = 0;
  double rho0 = 0, rho_l = 0, rho_d = 0;
  double S = 0, C_B = 0;
  int n_defaults = 0, n_active = 0;
  double money = 0;
};

enum class Halt { None, FullCollapse, CollapseDetected, Overflow, Underflow };

struct Result {
  std::vector<StepRow> rows;
  Halt halt = Halt::None;
  int halt_step = -1;
};

inline Result simulate(const mark0::ModelParams& raw) {
  const mark0::ModelParams q = raw.normalized();
  q.validate();
  const int n = q.n_firms;
  const double N = static_cast<double>(n);

  std::mt19937_64 gen(q.seed);
  auto rnd = [&gen]() { return (gen() >> 11) * 0x1.0p-53; };

  std::vector<double> p(n), Y(n), W(n), E(n), D(n), P(n);
  std::vector<int> a(n, 1);

  // --- initialization ---
  const double noise = q.init_noise;
  const double Y0 = 0.1 + 0.9 * rnd();
  double cash = 0;
  for (int i = 0; i < n; ++i) {
    p[i] = 1.0 + 0.1 * noise * (2.0 * rnd() - 1.0);
    Y[i] = Y0 + 0.1 * noise * (2.0 * rnd() - 1.0);
    if (p[i] < 1e-300) p[i] = 1e-300;
    if (Y[i] < 0.0) Y[i] = 0.0;
    D[i] = Y0;
    W[i] = 1.0;
    E[i] = 2.0 * W[i] * Y[i] * rnd();
    P[i] = p[i] * std::min(D[i], Y[i]) - W[i] * Y[i];
    cash += E[i];
  }
  double S = N - cash;

  double rho0 = q.rho_star, rho_l = q.rho_star, rho_d = q.rho_star;
  double pi = 0, pi_ema = 0, rho_d_ema = q.rho_star, rho_l_ema = q.rho_star;

  auto aggregates = [&](double& pbar, double& wbar, double& u, double& eps) -> bool {
    double sy = 0, spy = 0, swy = 0;
    for (int i = 0; i < n; ++i) {
      if (!a[i]) continue;
      sy += Y[i];
      spy += p[i] * Y[i];
      swy += W[i] * Y[i];
    }
    if (!(sy > 0.0)) return false;
    pbar = spy / sy;
    wbar = swy / sy;
    eps = sy / N;
    u = 1.0 - eps;
    return true;
  };

  double p_bar, w_bar, u, eps;
  Result out;
  if (!aggregates(p_bar, w_bar, u, eps)) {
    out.halt = Halt::FullCollapse;
    out.halt_step = 0;
    return out;
  }
  double u_ema = u;
  double p_bar_prev = p_bar;

  auto halt_at = [&out](Halt h, int t) {
    out.halt = h;
    out.halt_step = t;
  };

  for (int t = 1; t <= q.T; ++t) {
    // hiring pools from start-of-step aggregates
    std::vector<double> ustar(n, 0.0);
    if (u != 0.0) {
      if (w_bar > 0.0) {
        double z = 0;
        for (int i = 0; i < n; ++i)
          if (a[i]) z += std::exp(q.beta * W[i] / w_bar);
        for (int i = 0; i < n; ++i)
          if (a[i]) ustar[i] = std::exp(q.beta * W[i] / w_bar) / z * N * u;
      } else {
        int live = 0;
        for (int i = 0; i < n; ++i) live += a[i];
        for (int i = 0; i < n; ++i)
          if (a[i]) ustar[i] = N * u / live;
      }
    }

    // EMA trackers, then CB policy
    pi_ema = q.omega * pi + (1.0 - q.omega) * pi_ema;
    rho_d_ema = q.omega * rho_d + (1.0 - q.omega) * rho_d_ema;
    rho_l_ema = q.omega * rho_l + (1.0 - q.omega) * rho_l_ema;
    u_ema = q.omega * u + (1.0 - q.omega) * u_ema;
    const double pi_hat = q.tau_R * pi_ema + q.tau_T * q.pi_star;
    if (pi_hat <= -1.0) {
      halt_at(Halt::Underflow, t);
      return out;
    }
    rho0 = q.rho_star + q.phi_pi * (pi_ema - q.pi_star);
    if (q.zlb_enabled && rho0 < 0.0) rho0 = 0.0;
    const double Gamma = std::max(q.alpha_gamma * (rho_l_ema - pi_hat), q.gamma0);

    // firm loop
    double writeoff = 0, E_plus = 0, E_minus = 0;
    int n_defaults = 0;
    for (int i = 0; i < n; ++i) {
      if (!a[i]) continue;
      const bool defaults = E[i] < 0.0 && E[i] <= -q.theta * W[i] * Y[i];
      if (defaults) {
        a[i] = 0;
        writeoff -= E[i];
        Y[i] = 0.0;
        ++n_defaults;
        continue;
      }
      E_plus += std::max(E[i], 0.0);
      E_minus -= std::min(E[i], 0.0);
      const double payroll = W[i] * Y[i];
      const double gphi = payroll > 0.0 ? Gamma * (-E[i] / payroll) : 0.0;
      const double eta_p = std::clamp(q.eta0_plus() * (1.0 - gphi), 0.0, 1.0);
      const double eta_m = std::clamp(q.eta0_minus * (1.0 + gphi), 0.0, 1.0);
      if (Y[i] < D[i]) {
        if (P[i] > 0.0) {
          W[i] *= 1.0 + q.gamma * (1.0 - gphi) * eps * rnd();
          if (Y[i] > 0.0) {
            const double cap = (p[i] * std::min(D[i], Y[i]) + rho_d * std::max(E[i], 0.0) +
                                rho_l * std::min(E[i], 0.0)) /
                               Y[i];
            W[i] = std::min(W[i], cap);
          }
        }
        Y[i] += std::min(eta_p * (D[i] - Y[i]), ustar[i]);
        if (p[i] < p_bar) p[i] *= 1.0 + q.gamma * rnd();
      } else if (Y[i] > D[i]) {
        if (P[i] < 0.0) W[i] *= 1.0 - q.gamma * (1.0 + gphi) * u * rnd();
        Y[i] = std::max(0.0, Y[i] - eta_m * (Y[i] - D[i]));
        if (p[i] > p_bar) p[i] *= 1.0 - q.gamma * rnd();
      }
      p[i] *= 1.0 + pi_hat;
      if (p[i] < 1e-300) p[i] = 1e-300;
      W[i] *= 1.0 + q.g_index * pi_hat;
      W[i] = std::max(W[i], 0.0);
    }

    // refreshed unemployment and mean price for demand and revivals
    double p_bar_mid, w_bar_mid, u_mid, eps_mid;
    if (!aggregates(p_bar_mid, w_bar_mid, u_mid, eps_mid)) {
      halt_at(Halt::FullCollapse, t);
      return out;
    }
    if (!std::isfinite(p_bar_mid) || p_bar_mid > q.collapse_guard) {
      halt_at(Halt::Overflow, t);
      return out;
    }

    // zero-profit bank
    rho_l = E_minus > 0.0 ? rho0 + (1.0 - q.f_share) * writeoff / E_minus : rho0;
    if (!(S + E_plus > 0.0)) {
      halt_at(Halt::CollapseDetected, t);
      return out;
    }
    rho_d = (rho_l * E_minus - writeoff) / (S + E_plus);

    // household budget
    double wages = 0;
    for (int i = 0; i < n; ++i)
      if (a[i]) wages += W[i] * Y[i];
    S = (1.0 + rho_d) * S + wages;
    const double c = std::clamp(q.c0 * (1.0 + q.alpha_c * (pi_hat - rho_d_ema)), 0.0, 1.0);
    const double C_B = std::max(c * S, 0.0);

    // demand allocation
    double z = 0;
    for (int i = 0; i < n; ++i)
      if (a[i]) z += std::exp(-q.beta * p[i] / p_bar_mid);
    for (int i = 0; i < n; ++i) {
      if (a[i] && z > 0.0 && C_B > 0.0)
        D[i] = C_B * std::exp(-q.beta * p[i] / p_bar_mid) / (p[i] * z);
      else
        D[i] = 0.0;
    }

    // accounting and dividends
    double E_plus_after = 0;
    for (int i = 0; i < n; ++i) {
      if (!a[i]) continue;
      const double sales = p[i] * std::min(Y[i], D[i]);
      S -= sales;
      P[i] = sales - W[i] * Y[i] + rho_d * std::max(E[i], 0.0) + rho_l * std::min(E[i], 0.0);
      E[i] += P[i];
      if (P[i] > 0.0 && E[i] > 0.0) {
        const double div = q.delta * E[i];
        S += div;
        E[i] -= div;
      }
      E_plus_after += std::max(E[i], 0.0);
    }

    // revivals: stage first (consuming draws in index order), fund by a pro
    // rata levy on pre-existing positive balances, skip all if unfundable
    std::vector<int> revived_idx;
    std::vector<double> revived_Y;
    for (int i = 0; i < n; ++i) {
      if (a[i]) continue;
      if (rnd() < q.phi_revival) {
        revived_idx.push_back(i);
        revived_Y.push_back(u_mid * rnd());
      }
    }
    if (!revived_idx.empty()) {
      double need = 0;
      for (double y : revived_Y) need += w_bar * y;  // start-of-step mean wage
      const bool fundable = !(need > 0.0) || E_plus_after > 0.0;
      if (fundable) {
        if (need > 0.0) {
          const double frac = need / E_plus_after;
          for (int i = 0; i < n; ++i)
            if (a[i] && E[i] > 0.0) E[i] -= frac * E[i];
        }
        for (std::size_t k = 0; k < revived_idx.size(); ++k) {
          const int i = revived_idx[k];
          a[i] = 1;
          Y[i] = revived_Y[k];
          p[i] = p_bar_mid;
          W[i] = w_bar;
          E[i] = W[i] * Y[i];
        }
      }
    }

    // end-of-step aggregates and the step row
    if (!aggregates(p_bar, w_bar, u, eps)) {
      halt_at(Halt::FullCollapse, t);
      return out;
    }
    if (!std::isfinite(p_bar) || p_bar > q.collapse_guard) {
      halt_at(Halt::Overflow, t);
      return out;
    }
    pi = (p_bar - p_bar_prev) / p_bar_prev;
    p_bar_prev = p_bar;

    StepRow row;
    row.p_bar = p_bar;
    row.w_bar = w_bar;
    row.u = u;
    row.pi = pi;
    row.pi_ema = pi_ema;
    row.rho0 = rho0;
    row.rho_l = rho_l;
    row.rho_d = rho_d;
    row.S = S;
    row.C_B = C_B;
    row.n_defaults = n_defaults;
    row.n_active = 0;
    row.money = S;
    for (int i = 0; i < n; ++i)
      if (a[i]) {
        ++row.n_active;
        row.money += E[i];
      }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace oracle
