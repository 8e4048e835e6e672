#pragma once
// Post-equilibration measurement of a run: summary dashboard, phase
// classification and Phillips-curve extraction. Internal quantities are
// per-step fractions; reported inflation and rates are annualized percent
// using the linear steps_per_year scaling.

#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "economy.hpp"

namespace mark0 {

inline double annualize(double per_step, double steps_per_year) {
  return per_step * steps_per_year;
}
inline double deannualize(double annual, double steps_per_year) {
  return annual / steps_per_year;
}
inline double to_percent(double x) { return 100.0 * x; }
inline double from_percent(double x) { return x / 100.0; }

enum class PhaseLabel { HIHO, LILO, HyperInflation, HyperDeflation, FullCollapse, Indeterminate };
inline constexpr int kNumPhaseLabels = 6;

inline const char* to_string(PhaseLabel l) {
  switch (l) {
    case PhaseLabel::HIHO: return "HIHO";
    case PhaseLabel::LILO: return "LILO";
    case PhaseLabel::HyperInflation: return "HyperInflation";
    case PhaseLabel::HyperDeflation: return "HyperDeflation";
    case PhaseLabel::FullCollapse: return "FullCollapse";
    case PhaseLabel::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

inline std::optional<PhaseLabel> phase_from_string(std::string_view s) {
  for (int i = 0; i < kNumPhaseLabels; ++i) {
    const PhaseLabel l = static_cast<PhaseLabel>(i);
    if (s == to_string(l)) return l;
  }
  return std::nullopt;
}

struct PhaseThresholds {
  double u_hiho = 0.10;         // mean unemployment below this counts as high output
  double u_lilo = 0.20;         // mean unemployment above this counts as low output
  double pi_hiho_annual = 0.5;  // %/yr; HIHO additionally needs inflation above this
  double hyper_annual = 50.0;   // %/yr on the inflation EMA; beyond is hyperinflation
};

struct Dashboard {
  double mean_u = 0;
  double mean_pi_annual = 0;            // %/yr
  double p_neg = 0;                     // fraction of window steps with a negative policy rate
  double mean_real_deposit_annual = 0;  // %/yr, mean of rho_d - pi
  int window_steps = 0;
  bool window_truncated = false;  // halted early: stats cover whatever exists
  HaltReason halt = HaltReason::None;
  int halt_step = -1;
};

// Means over the measurement window t in (T_eq, T].
inline Dashboard dashboard(const TimeSeries& ts) {
  Dashboard d;
  d.halt = ts.halt;
  d.halt_step = ts.halt_step;
  d.window_truncated =
      ts.halt != HaltReason::None || static_cast<int>(ts.records.size()) < ts.meta.T;
  double sum_u = 0, sum_pi = 0, sum_real = 0;
  int n = 0, n_neg = 0;
  for (const StepRecord& r : ts.records) {
    if (r.t <= ts.meta.T_eq) continue;
    ++n;
    sum_u += r.u;
    sum_pi += r.pi;
    sum_real += r.rho_d - r.pi;
    if (r.rho0 < 0.0) ++n_neg;
  }
  d.window_steps = n;
  if (n == 0) return d;
  const double spy = ts.meta.steps_per_year;
  d.mean_u = sum_u / n;
  d.mean_pi_annual = to_percent(annualize(sum_pi / n, spy));
  d.p_neg = static_cast<double>(n_neg) / n;
  d.mean_real_deposit_annual = to_percent(annualize(sum_real / n, spy));
  return d;
}

// Phase taxonomy. Halt reasons classify directly; otherwise the window means
// decide. The bank-collapse halt has no label of its own and lands on
// FullCollapse.
inline PhaseLabel classify_phase(const TimeSeries& ts, const PhaseThresholds& th = {}) {
  switch (ts.halt) {
    case HaltReason::Overflow: return PhaseLabel::HyperInflation;
    case HaltReason::Underflow: return PhaseLabel::HyperDeflation;
    case HaltReason::FullCollapse:
    case HaltReason::CollapseDetected: return PhaseLabel::FullCollapse;
    case HaltReason::None: break;
  }
  double sum_u = 0, sum_pi = 0, sum_pi_ema = 0;
  int n = 0;
  for (const StepRecord& r : ts.records) {
    if (r.t <= ts.meta.T_eq) continue;
    ++n;
    sum_u += r.u;
    sum_pi += r.pi;
    sum_pi_ema += r.pi_ema;
  }
  if (n == 0) return PhaseLabel::Indeterminate;
  const double spy = ts.meta.steps_per_year;
  const double pi_ema_annual = to_percent(annualize(sum_pi_ema / n, spy));
  if (pi_ema_annual > th.hyper_annual) return PhaseLabel::HyperInflation;
  if (pi_ema_annual < -th.hyper_annual) return PhaseLabel::HyperDeflation;
  const double mean_u = sum_u / n;
  const double pi_annual = to_percent(annualize(sum_pi / n, spy));
  if (mean_u < th.u_hiho && pi_annual > th.pi_hiho_annual) return PhaseLabel::HIHO;
  if (mean_u > th.u_lilo) return PhaseLabel::LILO;
  return PhaseLabel::Indeterminate;
}

struct PhillipsPoint {
  double u = 0;          // unemployment rate
  double pi_annual = 0;  // %/yr
};

// Window scatter of (u, annualized inflation), thinned by stride.
inline std::vector<PhillipsPoint> phillips_points(const TimeSeries& ts, int stride = 10) {
  std::vector<PhillipsPoint> pts;
  if (stride < 1) stride = 1;
  const double spy = ts.meta.steps_per_year;
  int k = 0;
  for (const StepRecord& r : ts.records) {
    if (r.t <= ts.meta.T_eq) continue;
    if (k++ % stride != 0) continue;
    pts.push_back({r.u, to_percent(annualize(r.pi, spy))});
  }
  return pts;
}

struct OlsFit {
  double slope = 0;
  double intercept = 0;
  int n = 0;
};

// Least squares of pi_annual on u. A degenerate abscissa yields slope 0 and
// the mean as intercept.
inline OlsFit ols_fit(const std::vector<PhillipsPoint>& pts) {
  OlsFit fit;
  fit.n = static_cast<int>(pts.size());
  if (fit.n == 0) return fit;
  double mu = 0, mp = 0;
  for (const PhillipsPoint& p : pts) {
    mu += p.u;
    mp += p.pi_annual;
  }
  mu /= fit.n;
  mp /= fit.n;
  double sxx = 0, sxy = 0;
  for (const PhillipsPoint& p : pts) {
    sxx += (p.u - mu) * (p.u - mu);
    sxy += (p.u - mu) * (p.pi_annual - mp);
  }
  if (sxx > 0.0) fit.slope = sxy / sxx;
  fit.intercept = mp - fit.slope * mu;
  return fit;
}

}  // namespace mark0
