#pragma once

// Random-restart coordinate ascent of |H3|, |a6|, |a7|, |Q1|, |Q2|, |Q3| and
// |H4| over atomic Herglotz measures, counting every sampled value that
// exceeds the stated bound.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/caratheodory.hpp"
#include "hankel/functionals.hpp"
#include "hankel/parallel.hpp"
#include "hankel/report.hpp"

namespace hankel {

enum class Functional { H3, a6, a7, Q1, Q2, Q3, H4 };

inline constexpr std::array<Functional, 7> kAllFunctionals = {Functional::H3, Functional::a6, Functional::a7, Functional::Q1,
                                                             Functional::Q2, Functional::Q3, Functional::H4};

struct FunctionalInfo {
  std::string_view name;
  std::string_view bound_text;
  double bound;
  // Slack allowed before a sample counts as a violation. The decimal bounds
  // are rounded, so they get the rounding margin.
  double margin;
};

inline const FunctionalInfo& info(Functional f) {
  static const std::array<FunctionalInfo, 7> table = {{
      {"H3", "1/9", 1.0 / 9.0, 1e-9},
      {"a6", "47/60", 47.0 / 60.0, 1e-9},
      {"a7", "503/480", 503.0 / 480.0, 1e-9},
      {"Q1", "659/720", 659.0 / 720.0, 1e-9},
      {"Q2", "1.11419", 1.11419, 1e-5},
      {"Q3", "1.21934", 1.21934, 1e-5},
      {"H4", "2.54589", 2.54589, 1e-9},
  }};
  return table[static_cast<std::size_t>(f)];
}

inline Functional parse_functional(std::string_view name) {
  for (Functional f : kAllFunctionals)
    if (info(f).name == name) return f;
  throw std::invalid_argument("unknown functional '" + std::string(name) + "' (expected H3, a6, a7, Q1, Q2, Q3 or H4)");
}

inline double evaluate_functional(Functional f, const CaratheodorySequence<Complex>& s) {
  const CoeffVector<Complex> c = coeffs_wp(s);
  switch (f) {
    case Functional::H3: return std::abs(h3_expanded(c));
    case Functional::a6: return std::abs(c[6]);
    case Functional::a7: return std::abs(c[7]);
    default: break;
  }
  const H4Decomposition<Complex> d = h4_decomposition(c);
  switch (f) {
    case Functional::Q1: return std::abs(d.q1);
    case Functional::Q2: return std::abs(d.q2);
    case Functional::Q3: return std::abs(d.q3);
    case Functional::H4: return std::abs(d.h4);
    default: break;
  }
  throw std::invalid_argument("unknown functional");
}

inline double evaluate_functional(Functional f, const AtomicMeasure& m) { return evaluate_functional(f, herglotz_coeffs(m, 6)); }

struct SearchOptions {
  int max_atoms = 6;
  // Each atom becomes the orbit {t, t + 2π/3, t + 4π/3} with equal thirds.
  bool threefold_orbits = false;
  std::uint64_t evals_per_restart = 500;
  unsigned workers = 0;  // 0: worker_count()
};

struct SearchResult {
  Functional id = Functional::H3;
  double best = 0.0;
  AtomicMeasure measure;  // expanded measure (orbits included)
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  double bound = 0.0;
  double slack = 0.0;
  std::uint64_t violations = 0;
  double worst_excess = 0.0;  // max over samples of value - bound (may be negative)
};

namespace detail {

inline double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

inline AtomicMeasure expand_measure(const std::vector<double>& angles, const std::vector<double>& weights, bool orbits) {
  double total = 0.0;
  for (double w : weights) total += w;
  AtomicMeasure m;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double w = total > 0.0 ? weights[i] / total : 1.0 / static_cast<double>(weights.size());
    if (orbits) {
      for (int j = 0; j < 3; ++j) m.atoms.push_back({wrap_angle(angles[i] + j * kTwoPi / 3.0), w / 3.0});
    } else {
      m.atoms.push_back({wrap_angle(angles[i]), w});
    }
  }
  return m;
}

inline bool measure_less(const AtomicMeasure& a, const AtomicMeasure& b) {
  const std::size_t n = std::min(a.atoms.size(), b.atoms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.atoms[i].angle != b.atoms[i].angle) return a.atoms[i].angle < b.atoms[i].angle;
    if (a.atoms[i].weight != b.atoms[i].weight) return a.atoms[i].weight < b.atoms[i].weight;
  }
  return a.atoms.size() < b.atoms.size();
}

inline bool better(double va, const AtomicMeasure& ma, double vb, const AtomicMeasure& mb) {
  if (va != vb) return va > vb;
  return measure_less(ma, mb);
}

struct RestartOutcome {
  double best = -1.0;
  AtomicMeasure measure;
  std::uint64_t evals = 0;
  std::uint64_t violations = 0;
  double worst_excess = -std::numeric_limits<double>::infinity();
};

// One restart stream: sample, polish by cyclic coordinate ascent (step halves
// after a sweep without improvement, 20 halvings), resample while evaluations
// remain.
inline RestartOutcome run_restart(Functional f, std::uint64_t budget, Rng rng, const SearchOptions& opt) {
  const FunctionalInfo& fi = info(f);
  RestartOutcome out;
  std::uniform_int_distribution<int> count(1, opt.max_atoms);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::exponential_distribution<double> gamma1(1.0);

  std::vector<double> th, w;
  auto eval = [&]() {
    const AtomicMeasure m = expand_measure(th, w, opt.threefold_orbits);
    const double v = evaluate_functional(f, m);
    ++out.evals;
    const double excess = v - fi.bound;
    out.worst_excess = std::max(out.worst_excess, excess);
    if (excess > fi.margin) ++out.violations;
    if (better(v, m, out.best, out.measure)) {
      out.best = v;
      out.measure = m;
    }
    return v;
  };

  while (out.evals < budget) {
    const int k = count(rng);
    th.assign(static_cast<std::size_t>(k), 0.0);
    w.assign(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < k; ++i) {
      th[static_cast<std::size_t>(i)] = angle(rng);
      w[static_cast<std::size_t>(i)] = gamma1(rng);
    }
    double total = 0.0;
    for (double x : w) total += x;
    for (double& x : w) x /= total;

    double cur = eval();
    double step = 0.5;
    int shrinks = 0;
    while (shrinks < 20 && out.evals < budget) {
      bool improved = false;
      for (std::size_t c = 0; c < 2 * th.size() && out.evals < budget; ++c) {
        double& v = c < th.size() ? th[c] : w[c - th.size()];
        const bool is_weight = c >= th.size();
        for (double dir : {1.0, -1.0}) {
          if (out.evals >= budget) break;
          const double old = v;
          v = old + dir * step;
          if (is_weight && v < 0.0) v = 0.0;
          if (v == old) continue;
          const double nv = eval();
          if (nv > cur) {
            cur = nv;
            improved = true;
            break;
          }
          v = old;
        }
      }
      if (!improved) {
        step *= 0.5;
        ++shrinks;
      }
    }
  }
  return out;
}

}  // namespace detail

// `budget` counts functional evaluations. Restarts get fixed slices of it and
// their own seed streams, so the result is independent of the worker count.
inline SearchResult maximize_functional(Functional f, std::uint64_t budget, std::uint64_t seed, const SearchOptions& opt = {}) {
  if (budget < 1) throw std::invalid_argument("maximize_functional: budget must be >= 1");
  if (opt.max_atoms < 1) throw std::invalid_argument("maximize_functional: max_atoms must be >= 1");
  const std::uint64_t per = std::max<std::uint64_t>(1, opt.evals_per_restart);
  const std::uint64_t restarts = std::max<std::uint64_t>(1, budget / per);
  std::vector<detail::RestartOutcome> outcomes(restarts);
  const std::uint64_t stream_base = 0x5eedULL * (static_cast<std::uint64_t>(f) + 1) + (opt.threefold_orbits ? 0x3f0ULL : 0ULL);
  parallel_for(restarts, opt.workers ? opt.workers : worker_count(), [&](std::size_t r) {
    const std::uint64_t share = budget / restarts + (r < budget % restarts ? 1 : 0);
    outcomes[r] = detail::run_restart(f, share, make_rng(seed, stream_base + r), opt);
  });

  SearchResult res;
  res.id = f;
  res.seed = seed;
  res.bound = info(f).bound;
  res.best = -1.0;
  res.worst_excess = -std::numeric_limits<double>::infinity();
  for (const auto& o : outcomes) {
    res.iterations += o.evals;
    res.violations += o.violations;
    res.worst_excess = std::max(res.worst_excess, o.worst_excess);
    if (detail::better(o.best, o.measure, res.best, res.measure)) {
      res.best = o.best;
      res.measure = o.measure;
    }
  }
  res.slack = res.bound - res.best;
  return res;
}

inline std::string format_measure(const AtomicMeasure& m) {
  std::string s;
  for (const auto& a : m.atoms) {
    if (!s.empty()) s += ',';
    s += fmt_real(a.angle) + ":" + fmt_real(a.weight);
  }
  return s;
}

struct GapRow {
  std::string functional;
  std::string bound_text;
  double bound = 0.0;
  double best = 0.0;
  double slack = 0.0;
  std::string measure;
  std::uint64_t violations = 0;
  bool critical = false;
};

inline std::vector<GapRow> report_gap(const std::vector<SearchResult>& results) {
  std::vector<GapRow> rows;
  for (const auto& r : results) {
    const FunctionalInfo& fi = info(r.id);
    rows.push_back({std::string(fi.name), std::string(fi.bound_text), r.bound, r.best, r.slack, format_measure(r.measure),
                    r.violations, r.slack < 0.0});
  }
  return rows;
}

// A row passes when no sample beat the bound by more than its margin.
inline void append_gap_items(std::vector<ReportItem>& items, const std::vector<SearchResult>& results) {
  const auto rows = report_gap(results);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const FunctionalInfo& fi = info(results[i].id);
    const bool ok = results[i].violations == 0;
    items.push_back({row.functional + "_max", row.bound_text, fmt_real(row.best), fi.margin, ok ? Status::Pass : Status::Fail});
    std::string note = "slack " + fmt_real(row.slack) + ", samples " + std::to_string(results[i].iterations) + ", violations " +
                       std::to_string(row.violations);
    if (row.critical) note = "CRITICAL " + note;
    items.push_back(info_item(row.functional + "_measure", "", note + ", measure " + row.measure));
  }
}

}  // namespace hankel
