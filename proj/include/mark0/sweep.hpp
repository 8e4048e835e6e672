#pragma once
// Parameter sweeps over one or two model axes with several seeds per grid
// point, a work-stealing thread pool, per-point phase statistics with
// coexistence detection, and a bisection locator for the HIHO/LILO boundary
// along the baseline rate.
//
// Results land in slots preallocated per (point, seed), so the outcome is
// byte-identical no matter how many workers run or in which order they finish.

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "measure.hpp"

namespace mark0 {

// Axis values use the config units: %/yr for the two rate axes, plain
// numbers elsewhere.
struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

struct SweepSpec {
  ModelParams base;
  std::vector<SweepAxis> axes;        // one or two
  std::vector<std::uint64_t> seeds;   // the seed doubles as the initial condition
  double init_perturbation = 1.0;     // scales the initial heterogeneity
  PhaseThresholds thresholds{};
  double coexist_min_freq = 0.1;      // a label "occurs" above this seed frequency
};

inline const std::vector<std::string>& sweepable_axes() {
  static const std::vector<std::string> names = {
      "ratio_R", "rho_star_annual", "pi_star_annual", "tau_R", "tau_T", "phi_pi", "g_index"};
  return names;
}

// Write one axis value into the params, converting %/yr where the axis is a
// rate. Throws on an unknown axis name.
inline void apply_axis_value(ModelParams& p, const std::string& name, double value) {
  if (name == "ratio_R") p.ratio_R = value;
  else if (name == "rho_star_annual") p.rho_star = deannualize(from_percent(value), p.steps_per_year);
  else if (name == "pi_star_annual") p.pi_star = deannualize(from_percent(value), p.steps_per_year);
  else if (name == "tau_R") p.tau_R = value;
  else if (name == "tau_T") p.tau_T = value;
  else if (name == "phi_pi") p.phi_pi = value;
  else if (name == "g_index") p.g_index = value;
  else throw std::invalid_argument("unknown sweep axis: " + name);
}

struct CellResult {
  std::uint64_t seed = 0;
  PhaseLabel label = PhaseLabel::Indeterminate;
  Dashboard dash;
};

struct PointResult {
  std::vector<double> coords;  // one value per axis, in axis order
  std::vector<CellResult> cells;
  std::array<int, kNumPhaseLabels> label_counts{};
  PhaseLabel majority = PhaseLabel::Indeterminate;
  bool coexistence = false;
  bool low_confidence = false;  // fewer than 4 seeds
};

struct SweepResult {
  std::vector<std::string> axis_names;
  std::vector<PointResult> points;  // first axis outer, second axis inner
};

// Most frequent label; ties break toward the smaller enum index so the
// outcome never depends on evaluation order.
inline PhaseLabel majority_label(const std::array<int, kNumPhaseLabels>& counts) {
  int best = 0;
  for (int i = 1; i < kNumPhaseLabels; ++i)
    if (counts[i] > counts[best]) best = i;
  return static_cast<PhaseLabel>(best);
}

// Two or more distinct non-Indeterminate labels each above min_freq mark the
// point as non-ergodic: the asymptotic state depends on the initial condition.
inline bool detect_coexistence(const PointResult& point, double min_freq = 0.1) {
  if (point.cells.empty()) return false;
  const double n = static_cast<double>(point.cells.size());
  int qualifying = 0;
  for (int i = 0; i < kNumPhaseLabels; ++i) {
    if (static_cast<PhaseLabel>(i) == PhaseLabel::Indeterminate) continue;
    if (static_cast<double>(point.label_counts[i]) / n >= min_freq) ++qualifying;
  }
  return qualifying >= 2;
}

namespace detail {

// Atomic-counter work pool: workers pull the next flat task index until the
// range is exhausted. Deterministic output: each task writes only its slot.
inline void parallel_for(std::size_t n_tasks, int n_workers, const std::function<void(std::size_t)>& task) {
  if (n_workers < 1) n_workers = 1;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(n_workers), n_tasks ? n_tasks : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n_tasks; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n_tasks) return;
        task(i);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace detail

// Run the full grid. Cells are (point, seed) pairs; points enumerate the
// first axis as the outer loop. n_workers <= 0 picks the hardware count.
inline SweepResult run_sweep(const SweepSpec& spec, int n_workers = 0) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw std::invalid_argument("sweep needs one or two axes");
  for (const SweepAxis& ax : spec.axes) {
    if (ax.values.empty()) throw std::invalid_argument("sweep axis has no values: " + ax.name);
    ModelParams probe = spec.base;
    apply_axis_value(probe, ax.name, ax.values.front());  // validates the name
  }
  if (spec.seeds.empty()) throw std::invalid_argument("sweep needs at least one seed");
  if (n_workers <= 0) n_workers = static_cast<int>(std::thread::hardware_concurrency());

  SweepResult result;
  for (const SweepAxis& ax : spec.axes) result.axis_names.push_back(ax.name);
  const std::size_t n1 = spec.axes[0].values.size();
  const std::size_t n2 = spec.axes.size() == 2 ? spec.axes[1].values.size() : 1;
  const std::size_t n_seeds = spec.seeds.size();
  result.points.resize(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      PointResult& pt = result.points[i * n2 + j];
      pt.coords.push_back(spec.axes[0].values[i]);
      if (spec.axes.size() == 2) pt.coords.push_back(spec.axes[1].values[j]);
      pt.cells.resize(n_seeds);
      pt.low_confidence = n_seeds < 4;
    }
  }

  detail::parallel_for(result.points.size() * n_seeds, n_workers, [&](std::size_t task) {
    const std::size_t point_idx = task / n_seeds;
    const std::size_t seed_idx = task % n_seeds;
    PointResult& pt = result.points[point_idx];
    ModelParams p = spec.base;
    for (std::size_t a = 0; a < spec.axes.size(); ++a)
      apply_axis_value(p, spec.axes[a].name, pt.coords[a]);
    p.seed = spec.seeds[seed_idx];
    p.init_noise = spec.init_perturbation;
    const TimeSeries ts = run(p);
    CellResult& cell = pt.cells[seed_idx];
    cell.seed = p.seed;
    cell.dash = dashboard(ts);
    cell.label = classify_phase(ts, spec.thresholds);
  });

  for (PointResult& pt : result.points) {
    pt.label_counts.fill(0);
    for (const CellResult& c : pt.cells) ++pt.label_counts[static_cast<int>(c.label)];
    pt.majority = majority_label(pt.label_counts);
    pt.coexistence = detect_coexistence(pt, spec.coexist_min_freq);
  }
  return result;
}

// ------------------------- transition localization -------------------------

// Majority label of one (rho_star, seed set) probe. Injected so tests can
// exercise the bisection against a synthetic step function.
using PointLabeler = std::function<PhaseLabel(double rho_star_annual, std::uint64_t seed)>;

inline PointLabeler model_labeler(const ModelParams& base, PhaseThresholds thresholds = {}) {
  return [base, thresholds](double rho_star_annual, std::uint64_t seed) {
    ModelParams p = base;
    apply_axis_value(p, "rho_star_annual", rho_star_annual);
    p.seed = seed;
    return classify_phase(run(p), thresholds);
  };
}

struct TransitionResult {
  bool found = false;         // false: no HIHO->LILO flip across the given range
  double rho_lo = 0;          // %/yr, HIHO side of the final bracket
  double rho_hi = 0;          // %/yr, LILO side of the final bracket
  double rho_dagger = 0;      // bracket midpoint, %/yr
  PhaseLabel lo_label = PhaseLabel::Indeterminate;
  PhaseLabel hi_label = PhaseLabel::Indeterminate;
  std::vector<PhaseLabel> lo_seed_labels;  // per-seed labels at the final bracket ends
  std::vector<PhaseLabel> hi_seed_labels;
};

// Bisect the baseline rate between a HIHO majority below and a LILO majority
// above until the bracket is narrower than tol_annual. Probes that are
// neither HIHO move the upper edge, so the invariant is HIHO below,
// non-HIHO above.
inline TransitionResult locate_transition(const PointLabeler& labeler,
                                          const std::vector<std::uint64_t>& seeds, double rho_lo,
                                          double rho_hi, double tol_annual = 0.1) {
  if (seeds.empty()) throw std::invalid_argument("locate_transition needs seeds");
  if (!(rho_lo < rho_hi)) throw std::invalid_argument("locate_transition needs rho_lo < rho_hi");

  auto probe = [&](double rho, std::vector<PhaseLabel>* keep) {
    std::array<int, kNumPhaseLabels> counts{};
    std::vector<PhaseLabel> labels;
    labels.reserve(seeds.size());
    for (std::uint64_t s : seeds) {
      const PhaseLabel l = labeler(rho, s);
      labels.push_back(l);
      ++counts[static_cast<int>(l)];
    }
    if (keep) *keep = std::move(labels);
    return majority_label(counts);
  };

  TransitionResult res;
  res.rho_lo = rho_lo;
  res.rho_hi = rho_hi;
  res.lo_label = probe(rho_lo, &res.lo_seed_labels);
  res.hi_label = probe(rho_hi, &res.hi_seed_labels);
  if (res.lo_label != PhaseLabel::HIHO || res.hi_label != PhaseLabel::LILO) {
    res.rho_dagger = 0.5 * (rho_lo + rho_hi);
    return res;  // found stays false: no clean transition in range
  }
  while (res.rho_hi - res.rho_lo > tol_annual) {
    const double mid = 0.5 * (res.rho_lo + res.rho_hi);
    std::vector<PhaseLabel> mid_labels;
    const PhaseLabel l = probe(mid, &mid_labels);
    if (l == PhaseLabel::HIHO) {
      res.rho_lo = mid;
      res.lo_label = l;
      res.lo_seed_labels = std::move(mid_labels);
    } else {
      res.rho_hi = mid;
      res.hi_label = l;
      res.hi_seed_labels = std::move(mid_labels);
    }
  }
  res.rho_dagger = 0.5 * (res.rho_lo + res.rho_hi);
  res.found = true;
  return res;
}

}  // namespace mark0
