#pragma once
// Deterministic simulation core of the Mark-0 macro ABM.
//
// One step advances the economy through a fixed block order:
//   1. start-of-step aggregates (carried from the previous end of step)
//   2. hiring pools u*
//   3. EMA trackers (pi, rho_d, rho_l from the previous step; u from block 1)
//   4. central-bank policy: expected inflation, Taylor rate, fragility slope
//   5. firm updates: default check, wages, production, prices
//   6. aggregate refresh (u, p_bar) over the surviving firms
//   7. zero-profit bank sets loan and deposit rates
//   8. household budget
//   9. demand allocation across active firms
//  10. accounting: sales, profits, dividends
//  11. revivals funded pro rata by positive-cash firms
//  12. end-of-step aggregates, realized inflation, step record
//
// All random draws come from one uniform stream in a documented order
// (initialization: one production-scale draw, then price/production/cash per
// firm; per step: wage then price draw per firm, each only when its branch
// fires; revivals: coin then production draw per inactive firm). Runs are
// bit-reproducible from (params, seed).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "params.hpp"
#include "rng.hpp"

namespace mark0 {

inline constexpr double kPriceFloor = 1e-300;  // keeps prices positive under deflationary spirals

// ------------------------------ state types ------------------------------

struct Firm {
  double p = 0;  // price
  double Y = 0;  // production == employment
  double W = 0;  // wage per unit of labor
  double E = 0;  // cash balance; negative means bank debt
  double D = 0;  // demand allocated in the latest step
  double P = 0;  // profit booked in the latest accounting pass
  bool active = true;
};

struct Household {
  double S = 0;    // savings
  double C_B = 0;  // consumption budget of the latest step
  double C = 0;    // realized consumption (total sales), C <= C_B
};

struct Bank {
  double rho0 = 0;           // policy rate
  double rho_l = 0;          // loan rate charged on negative balances
  double rho_d = 0;          // deposit rate paid on savings and positive balances
  double debt_writeoff = 0;  // defaulted debt of the current step
  double E_plus = 0;         // total positive firm cash
  double E_minus = 0;        // total firm debt, as a positive number
};

struct Macro {
  double p_bar = 0, w_bar = 0;  // production-weighted mean price and wage
  double u = 0, epsilon = 0;    // unemployment and employment rates
  double pi = 0;                // realized inflation of the latest step
  double pi_ema = 0, rho_d_ema = 0, rho_l_ema = 0, u_ema = 0;
  double pi_hat = 0;  // expected inflation
  double Gamma = 0;   // fragility sensitivity
};

enum class HaltReason {
  None,
  FullCollapse,      // no production left
  CollapseDetected,  // deposit base S + E+ exhausted
  Overflow,          // price level beyond the collapse guard or non-finite
  Underflow          // expected deflation at or below -100%
};

struct StepRecord {
  int t = 0;
  double p_bar = 0, w_bar = 0, u = 0;
  double pi = 0, pi_ema = 0;
  double rho0 = 0, rho_l = 0, rho_d = 0;
  double S = 0, C_B = 0;
  int n_defaults = 0, n_active = 0;
  double money_total = 0;  // S + active-firm cash; conserved at n_firms
};

struct RunMeta {
  int n_firms = 0, T = 0, T_eq = 0;
  double steps_per_year = 0;
  std::uint64_t seed = 0;
};

struct TimeSeries {
  RunMeta meta{};
  std::vector<StepRecord> records;
  HaltReason halt = HaltReason::None;
  int halt_step = -1;  // step during which the run stopped; -1 if it ran to T
};

// Max relative residuals of the per-step identities, collected when a run is
// audited. All of them are zero in exact arithmetic.
struct AuditStats {
  double money = 0;       // |S + sum(E) - n_firms| / max(n_firms, |S| + sum|E|)
  double budget = 0;      // |sum(p*D) - C_B| / max(C_B, 1)
  double hiring = 0;      // |sum(u*) - n_firms*u| / max(n_firms*u, 1)
  double bank = 0;        // zero-profit identity residual
  double wage_clamp = 0;  // recomputed profit at a clamped wage
  long clamp_events = 0;
};

// ------------------------------ primitive ops ------------------------------

inline double clip01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

inline double ema_update(double x, double prev, double omega) {
  return omega * x + (1.0 - omega) * prev;
}

inline double expected_inflation(double pi_ema, double pi_star, double tau_R, double tau_T) {
  return tau_R * pi_ema + tau_T * pi_star;
}

inline double taylor_rate(double rho_star, double phi_pi, double pi_ema, double pi_star,
                          bool zlb_enabled) {
  const double r = rho_star + phi_pi * (pi_ema - pi_star);
  return zlb_enabled ? std::max(r, 0.0) : r;
}

// Financial fragility -E/(W*Y). A firm with an empty payroll carries no
// leverage signal; treat it as neutral so downstream factors stay finite.
inline double fragility(double E, double W, double Y) {
  const double wy = W * Y;
  return wy > 0.0 ? -E / wy : 0.0;
}

inline double fragility_sensitivity(double rho_l_ema, double pi_hat, double alpha_gamma,
                                    double gamma0) {
  return std::max(alpha_gamma * (rho_l_ema - pi_hat), gamma0);
}

// Default rule: debt at or beyond theta times the wage bill. Zero-payroll
// firms default exactly when they are in debt.
inline bool default_check(const Firm& f, double theta) {
  if (f.E >= 0.0) return false;
  return f.E <= -theta * (f.W * f.Y);
}

struct Aggregates {
  double p_bar = 0, w_bar = 0, u = 0, epsilon = 0, sum_Y = 0;
  bool collapsed = false;  // no production left anywhere
};

// Production-weighted mean price and wage plus employment shares, over active
// firms only.
inline Aggregates compute_aggregates(const std::vector<Firm>& firms) {
  Aggregates a;
  double sum_pY = 0, sum_WY = 0;
  for (const Firm& f : firms) {
    if (!f.active) continue;
    a.sum_Y += f.Y;
    sum_pY += f.p * f.Y;
    sum_WY += f.W * f.Y;
  }
  if (a.sum_Y <= 0.0) {
    a.collapsed = true;
    return a;
  }
  const double n = static_cast<double>(firms.size());
  a.epsilon = a.sum_Y / n;
  a.u = 1.0 - a.epsilon;
  a.p_bar = sum_pY / a.sum_Y;
  a.w_bar = sum_WY / a.sum_Y;
  return a;
}

// Hiring capacity u*_i: a wage softmax over active firms scaled to the jobless
// pool, so sum(u*) == n_firms * u. The exponent is shifted by the max wage;
// that leaves every ratio unchanged and cannot overflow.
inline void hiring_pools(const std::vector<Firm>& firms, double u, double w_bar, double beta,
                         std::vector<double>& out) {
  out.assign(firms.size(), 0.0);
  if (u == 0.0) return;
  double wmax = -std::numeric_limits<double>::infinity();
  for (const Firm& f : firms)
    if (f.active && f.W > wmax) wmax = f.W;
  if (!(wmax > -std::numeric_limits<double>::infinity())) return;  // nobody active
  const double slope = w_bar > 0.0 ? beta / w_bar : 0.0;           // degenerate w_bar: uniform pools
  double z = 0.0;
  for (std::size_t i = 0; i < firms.size(); ++i) {
    if (!firms[i].active) continue;
    out[i] = std::exp((firms[i].W - wmax) * slope);
    z += out[i];
  }
  const double scale = static_cast<double>(firms.size()) * u / z;
  for (std::size_t i = 0; i < firms.size(); ++i) out[i] *= scale;
}

// Zero-profit wage cap: the wage bill may not exceed sales revenue plus net
// interest, both taken at the pre-update state. Callers ensure Y > 0.
inline double wage_cap_zero_profit(double p, double D, double Y, double E, double rho_d,
                                   double rho_l) {
  const double revenue = p * std::min(D, Y);
  const double interest = rho_d * std::max(E, 0.0) + rho_l * std::min(E, 0.0);
  return (revenue + interest) / Y;
}

struct SurvivorResult {
  bool clamped = false;
  double W_pre_index = 0;  // wage after the cap, before indexation (audit hook)
};

// Wage, production and price response of a solvent firm. The branch is chosen
// on the previous step's demand imbalance; within a branch the wage moves
// first, then production, then the price. Consumes zero, one or two draws:
// the wage draw first, then the price draw, each only when its condition
// holds. Afterwards both price and wage are indexed to expected inflation.
inline SurvivorResult survivor_update(Firm& f, const ModelParams& pp, double u, double epsilon,
                                      double p_bar, double gphi, double pi_hat, double u_star_i,
                                      double rho_d, double rho_l, UniformRng& rng) {
  SurvivorResult res;
  const double eta_plus = clip01(pp.eta0_plus() * (1.0 - gphi));
  const double eta_minus = clip01(pp.eta0_minus * (1.0 + gphi));
  if (f.Y < f.D) {  // excess demand: raise the wage if profitable, hire, raise a cheap price
    if (f.P > 0.0) {
      f.W *= 1.0 + pp.gamma * (1.0 - gphi) * epsilon * rng.next();
      if (f.Y > 0.0) {
        const double cap = wage_cap_zero_profit(f.p, f.D, f.Y, f.E, rho_d, rho_l);
        if (cap < f.W) {
          f.W = cap;
          res.clamped = true;
        }
      }
    }
    f.Y += std::min(eta_plus * (f.D - f.Y), u_star_i);
    if (f.p < p_bar) f.p *= 1.0 + pp.gamma * rng.next();
  } else if (f.Y > f.D) {  // excess supply: cut the wage if losing money, fire, cut a dear price
    if (f.P < 0.0) {
      f.W *= 1.0 - pp.gamma * (1.0 + gphi) * u * rng.next();
    }
    f.Y = std::max(0.0, f.Y - eta_minus * (f.Y - f.D));
    if (f.p > p_bar) f.p *= 1.0 - pp.gamma * rng.next();
  }
  res.W_pre_index = f.W;
  f.p *= 1.0 + pi_hat;
  if (f.p < kPriceFloor) f.p = kPriceFloor;
  f.W *= 1.0 + pp.g_index * pi_hat;
  if (f.W < 0.0) f.W = 0.0;
  return res;
}

// Zero-profit bank: borrowers absorb a share f of the step's defaulted debt
// through the loan rate, depositors absorb the rest through the deposit rate.
// Without borrowers the loan rate stays at the policy rate and the whole
// write-off falls on the deposit side.
inline std::optional<HaltReason> bank_set_rates(Bank& b, double S, double f_share) {
  b.rho_l = b.E_minus > 0.0 ? b.rho0 + (1.0 - f_share) * b.debt_writeoff / b.E_minus : b.rho0;
  const double base = S + b.E_plus;
  if (!(base > 0.0)) return HaltReason::CollapseDetected;
  b.rho_d = (b.rho_l * b.E_minus - b.debt_writeoff) / base;
  return std::nullopt;
}

// Interest on savings, wage income, then the consumption plan. The budget is
// floored at zero: transiently negative savings (possible only in degenerate
// corners) must not produce negative demand.
inline void household_budget(Household& h, double rho_d, double wages, double pi_hat,
                             double rho_d_ema, double c0, double alpha_c) {
  h.S = (1.0 + rho_d) * h.S + wages;
  const double c = clip01(c0 * (1.0 + alpha_c * (pi_hat - rho_d_ema)));
  h.C_B = std::max(c * h.S, 0.0);
}

// Spread the consumption budget across active firms by a price logit;
// p_i * D_i sums to C_B. Inactive firms get zero demand.
inline void allocate_demand(std::vector<Firm>& firms, double C_B, double beta, double p_bar,
                            std::vector<double>& weight_buf) {
  weight_buf.assign(firms.size(), 0.0);
  double z = 0.0;
  for (std::size_t i = 0; i < firms.size(); ++i) {
    if (!firms[i].active) continue;
    weight_buf[i] = std::exp(-beta * firms[i].p / p_bar);
    z += weight_buf[i];
  }
  for (std::size_t i = 0; i < firms.size(); ++i) {
    Firm& f = firms[i];
    f.D = (f.active && z > 0.0 && C_B > 0.0) ? C_B * weight_buf[i] / (f.p * z) : 0.0;
  }
}

// Book sales, wages and interest, pay dividends out of profitable cash-rich
// firms, and rebuild the positive-cash pool. Returns total sales.
inline double settle_accounts(std::vector<Firm>& firms, Household& h, Bank& b, double delta) {
  b.E_plus = 0.0;
  double sales_total = 0.0;
  for (Firm& f : firms) {
    if (!f.active) continue;
    const double sales = f.p * std::min(f.Y, f.D);
    h.S -= sales;
    sales_total += sales;
    f.P = sales - f.W * f.Y + b.rho_d * std::max(f.E, 0.0) + b.rho_l * std::min(f.E, 0.0);
    f.E += f.P;
    if (f.P > 0.0 && f.E > 0.0) {
      const double dividend = delta * f.E;
      h.S += dividend;
      f.E -= dividend;
    }
    b.E_plus += std::max(f.E, 0.0);
  }
  h.C = sales_total;
  return sales_total;
}

struct ReviveOutcome {
  int revived = 0;
  bool skipped = false;  // revivals wanted funding but no firm had positive cash
};

// Inactive firms re-enter with probability phi_revival at the current mean
// price and the start-of-step mean wage. Their starting cash is levied pro
// rata from the firms that ended the accounting pass with positive balances
// (pool E_plus). If funding is needed but the pool is empty, this step's
// revivals are dropped; the draws are consumed either way so the stream stays
// aligned.
inline ReviveOutcome revive_firms(std::vector<Firm>& firms, double u, double p_bar, double w_bar,
                                  double phi_revival, double E_plus_pool, UniformRng& rng) {
  struct Entry {
    std::size_t i;
    double Y;
  };
  std::vector<Entry> staged;
  for (std::size_t i = 0; i < firms.size(); ++i) {
    if (firms[i].active) continue;
    if (rng.next() < phi_revival) staged.push_back({i, u * rng.next()});
  }
  ReviveOutcome out;
  if (staged.empty()) return out;
  double need = 0.0;
  for (const Entry& e : staged) need += w_bar * e.Y;
  if (need > 0.0 && !(E_plus_pool > 0.0)) {
    out.skipped = true;
    return out;
  }
  if (need > 0.0) {
    const double frac = need / E_plus_pool;
    for (Firm& f : firms)
      if (f.active && f.E > 0.0) f.E -= frac * f.E;
  }
  for (const Entry& e : staged) {
    Firm& f = firms[e.i];
    f.active = true;
    f.Y = e.Y;
    f.p = p_bar;
    f.W = w_bar;
    f.E = f.W * f.Y;
  }
  out.revived = static_cast<int>(staged.size());
  return out;
}

// --------------------------------- economy ---------------------------------

class Economy {
 public:
  explicit Economy(const ModelParams& params) : p_(params.normalized()), rng_(p_.seed) {
    p_.validate();
    init();
  }

  const ModelParams& params() const { return p_; }
  const std::vector<Firm>& firms() const { return firms_; }
  const Household& household() const { return house_; }
  const Bank& bank() const { return bank_; }
  const Macro& macro() const { return macro_; }
  int t() const { return t_; }
  HaltReason halt() const { return halt_; }
  void set_audit(AuditStats* audit) { audit_ = audit; }

  double money_total() const {
    double m = house_.S;
    for (const Firm& f : firms_)
      if (f.active) m += f.E;
    return m;
  }

  // Advance one step. Returns the step record, or nothing once the run has
  // halted; the halting step itself produces no record.
  std::optional<StepRecord> step() {
    if (halt_ != HaltReason::None) return std::nullopt;
    ++t_;

    // 2. hiring pools from the start-of-step aggregates
    hiring_pools(firms_, macro_.u, macro_.w_bar, p_.beta, ustar_);
    if (audit_ && macro_.u > 0.0) {
      double s = 0.0;
      for (double v : ustar_) s += v;
      const double target = static_cast<double>(p_.n_firms) * macro_.u;
      audit_->hiring = std::max(audit_->hiring, std::abs(s - target) / std::max(target, 1.0));
    }

    // 3. EMA trackers
    macro_.pi_ema = ema_update(macro_.pi, macro_.pi_ema, p_.omega);
    macro_.rho_d_ema = ema_update(bank_.rho_d, macro_.rho_d_ema, p_.omega);
    macro_.rho_l_ema = ema_update(bank_.rho_l, macro_.rho_l_ema, p_.omega);
    macro_.u_ema = ema_update(macro_.u, macro_.u_ema, p_.omega);

    // 4. central-bank policy
    macro_.pi_hat = expected_inflation(macro_.pi_ema, p_.pi_star, p_.tau_R, p_.tau_T);
    if (macro_.pi_hat <= -1.0) return halt_with(HaltReason::Underflow);
    bank_.rho0 = taylor_rate(p_.rho_star, p_.phi_pi, macro_.pi_ema, p_.pi_star, p_.zlb_enabled);
    macro_.Gamma = fragility_sensitivity(macro_.rho_l_ema, macro_.pi_hat, p_.alpha_gamma, p_.gamma0);

    // 5. firm updates at last step's bank rates
    bank_.debt_writeoff = 0.0;
    bank_.E_plus = 0.0;
    bank_.E_minus = 0.0;
    int n_defaults = 0;
    for (std::size_t i = 0; i < firms_.size(); ++i) {
      Firm& f = firms_[i];
      if (!f.active) continue;
      if (default_check(f, p_.theta)) {
        f.active = false;
        bank_.debt_writeoff -= f.E;  // written-off debt, a positive amount
        f.Y = 0.0;                   // the workforce is released
        ++n_defaults;
        continue;
      }
      bank_.E_plus += std::max(f.E, 0.0);
      bank_.E_minus -= std::min(f.E, 0.0);
      const double gphi = macro_.Gamma * fragility(f.E, f.W, f.Y);
      const double p0 = f.p, Y0 = f.Y, D0 = f.D, E0 = f.E;
      const SurvivorResult r =
          survivor_update(f, p_, macro_.u, macro_.epsilon, macro_.p_bar, gphi, macro_.pi_hat,
                          ustar_[i], bank_.rho_d, bank_.rho_l, rng_);
      if (audit_ && r.clamped) {
        const double revenue = p0 * std::min(D0, Y0);
        const double interest = bank_.rho_d * std::max(E0, 0.0) + bank_.rho_l * std::min(E0, 0.0);
        const double residual = revenue - r.W_pre_index * Y0 + interest;
        const double scale = std::max({std::abs(revenue), std::abs(interest), 1e-12});
        audit_->wage_clamp = std::max(audit_->wage_clamp, std::abs(residual) / scale);
        ++audit_->clamp_events;
      }
    }

    // 6. refresh u and p_bar; the mean wage deliberately stays at its
    // start-of-step value for the revival block
    const Aggregates mid = compute_aggregates(firms_);
    if (mid.collapsed) return halt_with(HaltReason::FullCollapse);
    if (!std::isfinite(mid.p_bar) || mid.p_bar > p_.collapse_guard)
      return halt_with(HaltReason::Overflow);

    // 7. bank rates
    if (auto halted = bank_set_rates(bank_, house_.S, p_.f_share)) return halt_with(*halted);
    if (audit_) {
      const double lhs = bank_.rho_l * bank_.E_minus - bank_.debt_writeoff;
      const double rhs = bank_.rho_d * (house_.S + bank_.E_plus);
      const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
      audit_->bank = std::max(audit_->bank, std::abs(lhs - rhs) / scale);
    }

    // 8. household budget out of post-update wages
    double wages = 0.0;
    for (const Firm& f : firms_)
      if (f.active) wages += f.W * f.Y;
    household_budget(house_, bank_.rho_d, wages, macro_.pi_hat, macro_.rho_d_ema, p_.c0,
                     p_.alpha_c);

    // 9. demand allocation
    allocate_demand(firms_, house_.C_B, p_.beta, mid.p_bar, wbuf_);
    if (audit_) {
      double spent = 0.0;
      for (const Firm& f : firms_)
        if (f.active) spent += f.p * f.D;
      audit_->budget =
          std::max(audit_->budget, std::abs(spent - house_.C_B) / std::max(house_.C_B, 1.0));
    }

    // 10. accounting
    settle_accounts(firms_, house_, bank_, p_.delta);

    // 11. revivals at the refreshed unemployment and price level
    revive_firms(firms_, mid.u, mid.p_bar, macro_.w_bar, p_.phi_revival, bank_.E_plus, rng_);

    // 12. end-of-step aggregates, realized inflation, record
    const Aggregates end = compute_aggregates(firms_);
    if (end.collapsed) return halt_with(HaltReason::FullCollapse);
    if (!std::isfinite(end.p_bar) || end.p_bar > p_.collapse_guard)
      return halt_with(HaltReason::Overflow);
    macro_.pi = (end.p_bar - p_bar_prev_) / p_bar_prev_;
    p_bar_prev_ = end.p_bar;
    macro_.p_bar = end.p_bar;
    macro_.w_bar = end.w_bar;
    macro_.u = end.u;
    macro_.epsilon = end.epsilon;

    StepRecord rec;
    rec.t = t_;
    rec.p_bar = end.p_bar;
    rec.w_bar = end.w_bar;
    rec.u = end.u;
    rec.pi = macro_.pi;
    rec.pi_ema = macro_.pi_ema;
    rec.rho0 = bank_.rho0;
    rec.rho_l = bank_.rho_l;
    rec.rho_d = bank_.rho_d;
    rec.S = house_.S;
    rec.C_B = house_.C_B;
    rec.n_defaults = n_defaults;
    rec.n_active = 0;
    for (const Firm& f : firms_)
      if (f.active) ++rec.n_active;
    rec.money_total = money_total();
    if (audit_) {
      // In inflating states the savings and the firm balances both grow like
      // the price level while their sum stays fixed, so the conservation
      // residual is measured against the gross ledger scale; while nominal
      // levels stay small this denominator is just n_firms.
      const double n = static_cast<double>(p_.n_firms);
      double gross = std::abs(house_.S);
      for (const Firm& f : firms_)
        if (f.active) gross += std::abs(f.E);
      audit_->money =
          std::max(audit_->money, std::abs(rec.money_total - n) / std::max(n, gross));
    }
    return rec;
  }

 private:
  std::nullopt_t halt_with(HaltReason r) {
    halt_ = r;
    return std::nullopt;
  }

  void init() {
    firms_.assign(static_cast<std::size_t>(p_.n_firms), Firm{});
    const double s = p_.init_noise;
    const double Y0 = 0.1 + 0.9 * rng_.next();
    double cash_sum = 0.0;
    for (Firm& f : firms_) {
      f.p = 1.0 + 0.1 * s * (2.0 * rng_.next() - 1.0);
      f.Y = Y0 + 0.1 * s * (2.0 * rng_.next() - 1.0);
      if (f.p < kPriceFloor) f.p = kPriceFloor;  // only reachable for large init_noise
      if (f.Y < 0.0) f.Y = 0.0;
      f.D = Y0;
      f.W = 1.0;
      f.E = 2.0 * f.W * f.Y * rng_.next();
      f.P = f.p * std::min(f.D, f.Y) - f.W * f.Y;
      f.active = true;
      cash_sum += f.E;
    }
    house_.S = static_cast<double>(p_.n_firms) - cash_sum;  // fixes total money at n_firms

    // Rates and their trackers start at the baseline so the first step sees
    // no artificial jump; the inflation tracker starts at zero.
    bank_.rho0 = bank_.rho_l = bank_.rho_d = p_.rho_star;
    macro_.rho_d_ema = macro_.rho_l_ema = p_.rho_star;
    macro_.pi = 0.0;
    macro_.pi_ema = 0.0;

    const Aggregates a = compute_aggregates(firms_);
    if (a.collapsed) {
      halt_ = HaltReason::FullCollapse;
      return;
    }
    macro_.p_bar = a.p_bar;
    macro_.w_bar = a.w_bar;
    macro_.u = a.u;
    macro_.epsilon = a.epsilon;
    macro_.u_ema = a.u;
    p_bar_prev_ = a.p_bar;
  }

  ModelParams p_;
  UniformRng rng_;
  std::vector<Firm> firms_;
  Household house_;
  Bank bank_;
  Macro macro_;
  int t_ = 0;
  HaltReason halt_ = HaltReason::None;
  double p_bar_prev_ = 0;
  std::vector<double> ustar_, wbuf_;
  AuditStats* audit_ = nullptr;
};

// Run to completion or halt. Records cover completed steps only.
inline TimeSeries run(const ModelParams& params, AuditStats* audit = nullptr) {
  Economy eco(params);
  eco.set_audit(audit);
  TimeSeries ts;
  ts.meta = {eco.params().n_firms, eco.params().T, eco.params().T_eq,
             eco.params().steps_per_year, eco.params().seed};
  ts.records.reserve(static_cast<std::size_t>(eco.params().T));
  for (int t = 1; t <= eco.params().T; ++t) {
    auto rec = eco.step();
    if (!rec) {
      ts.halt = eco.halt();
      ts.halt_step = eco.t();
      break;
    }
    ts.records.push_back(*rec);
  }
  return ts;
}

inline const char* to_string(HaltReason r) {
  switch (r) {
    case HaltReason::None: return "none";
    case HaltReason::FullCollapse: return "full_collapse";
    case HaltReason::CollapseDetected: return "collapse_detected";
    case HaltReason::Overflow: return "overflow";
    case HaltReason::Underflow: return "underflow";
  }
  return "unknown";
}

}  // namespace mark0
