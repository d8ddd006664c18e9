// Copyright 2026 The qpurify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Recurrence purification on Bell-diagonal coefficients.
//
// Every two-copy map here is "bilateral GXOR from control onto target, measure
// the target in Z on both sides, keep the control iff the two outcomes agree".
// Because the outcome difference equals the amplitude-index difference of the
// two pairs, the kept control has phase k1 + k2 and amplitude j1 with j1 == j2.
// P2 is the same map sandwiched between bilateral QFTs, which on coefficients is
// a transpose.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string_view>
#include <vector>

#include "qpurify/core_algebra.hpp"
#include "qpurify/states.hpp"

namespace qpurify {

/// Per-qudit depolarizing retention probabilities, each in [0,1].
struct NoiseParams {
  double Q = 1.0;  // gates
  double p = 1.0;  // transmission
  double q = 1.0;  // resource state / measurements

  void validate() const {
    auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!in01(Q) || !in01(p) || !in01(q)) throw InvalidInput("noise parameters must lie in [0,1]");
  }
};

enum class Step { P1, P2, BBPSSW, DEJMPS, ThreeCopy };
enum class Protocol { P1P2, DEJMPS, BBPSSW, ThreeCopy };

inline std::string_view to_string(Step s) {
  switch (s) {
    case Step::P1: return "P1";
    case Step::P2: return "P2";
    case Step::BBPSSW: return "BBPSSW";
    case Step::DEJMPS: return "DEJMPS";
    case Step::ThreeCopy: return "THREE_COPY";
  }
  return "?";
}

inline std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::P1P2: return "p1p2";
    case Protocol::DEJMPS: return "dejmps";
    case Protocol::BBPSSW: return "bbpssw";
    case Protocol::ThreeCopy: return "three_copy";
  }
  return "?";
}

inline Protocol parse_protocol(std::string_view s) {
  if (s == "p1p2") return Protocol::P1P2;
  if (s == "dejmps") return Protocol::DEJMPS;
  if (s == "bbpssw") return Protocol::BBPSSW;
  if (s == "three_copy") return Protocol::ThreeCopy;
  throw InvalidInput("unknown protocol '" + std::string(s) + "'");
}

/// Copies consumed per iteration (two-copy maps keep 1 of 2, three-copy 1 of 3).
inline int copies_per_step(Step s) { return s == Step::ThreeCopy ? 3 : 2; }

struct MapResult {
  CoeffMatrix state;
  double success_prob;
};

namespace detail {

inline MapResult finish(Dimension d, std::vector<double> raw) {
  double norm = 0.0;
  for (double v : raw) norm += v;
  if (!(norm > 0.0)) throw InvalidInput("purification step has zero success probability");
  for (double& v : raw) v /= norm;
  return {CoeffMatrix(d, std::move(raw)), std::min(norm, 1.0)};
}

}  // namespace detail

/// P1: removes amplitude (X) errors. Output alpha'(k, j) is proportional to
/// sum over k1 + k2 = k of alpha(k1, j) alpha(k2, j).
inline MapResult p1_map(const CoeffMatrix& s) {
  const int d = s.d();
  std::vector<double> out(size_t(d) * d, 0.0);
  for (int j = 0; j < d; ++j) {
    for (int k1 = 0; k1 < d; ++k1) {
      const double a1 = s(k1, j);
      if (a1 == 0.0) continue;
      for (int k2 = 0; k2 < d; ++k2) {
        out[size_t(mod_add(k1, k2, d)) * d + j] += a1 * s(k2, j);
      }
    }
  }
  return detail::finish(s.dim(), std::move(out));
}

/// P2: removes phase (Z) errors; P1 conjugated by the bilateral QFT.
inline MapResult p2_map(const CoeffMatrix& s) {
  auto r = p1_map(s.transposed());
  return {r.state.transposed(), r.success_prob};
}

enum class Subroutine { P1, P2 };

/// P1 when the amplitude-0 weight does not exceed the phase-0 weight (ties go to P1).
inline Subroutine choose_subroutine(const CoeffMatrix& s) {
  return s.column0_sum() <= s.row0_sum() ? Subroutine::P1 : Subroutine::P2;
}

/// Two-sided gate noise collapsed onto one qudit: retention Q^2 per pair.
inline CoeffMatrix noisy_step(const CoeffMatrix& s, double Q) {
  if (!(Q >= 0.0 && Q <= 1.0)) throw InvalidInput("Q must lie in [0,1]");
  return depolarize_channel(s, Q * Q);
}

/// 3 -> 1: the control is GXORed onto two targets, both must show zero amplitude difference.
inline MapResult three_copy_map(const CoeffMatrix& s, Subroutine orientation = Subroutine::P1) {
  if (orientation == Subroutine::P2) {
    auto r = three_copy_map(s.transposed(), Subroutine::P1);
    return {r.state.transposed(), r.success_prob};
  }
  const int d = s.d();
  std::vector<double> out(size_t(d) * d, 0.0);
  for (int j = 0; j < d; ++j) {
    // Convolve column j with itself twice over the phase index.
    std::vector<double> pair(d, 0.0);
    for (int k1 = 0; k1 < d; ++k1)
      for (int k2 = 0; k2 < d; ++k2) pair[mod_add(k1, k2, d)] += s(k1, j) * s(k2, j);
    for (int k12 = 0; k12 < d; ++k12)
      for (int k3 = 0; k3 < d; ++k3) out[size_t(mod_add(k12, k3, d)) * d + j] += pair[k12] * s(k3, j);
  }
  return detail::finish(s.dim(), std::move(out));
}

/// Fidelity after one noisy generalized BBPSSW round on an isotropic input of fidelity F.
inline double bbpssw_map(double F, Dimension dim, double Q) {
  const double d = dim.value();
  const double d2 = d * d;
  const double Q2 = Q * Q;
  const double a1 = F * Q2 + (1.0 - Q2) / d2;
  const double a2 = (1.0 - F) * Q2 / (d2 - 1.0) + (1.0 - Q2) / d2;
  const double num = a1 * a1 + a2 * a2 * (d - 1.0);
  const double den = a1 * a1 + 2.0 * a1 * a2 * (d - 1.0) + a2 * a2 * (d * d2 - 2.0 * d + 1.0);
  return num / den;
}

/// Generalized BBPSSW on coefficients: twirl, gate noise, P1, twirl.
inline MapResult bbpssw_step(const CoeffMatrix& s, double Q) {
  auto r = p1_map(noisy_step(twirl_isotropic(s), Q));
  return {twirl_isotropic(r.state), r.success_prob};
}

/// Generalized DEJMPS iteration: gate noise, P1, then exchange phase and amplitude.
inline MapResult dejmps_map(const CoeffMatrix& s, double Q) {
  auto r = p1_map(noisy_step(s, Q));
  return {r.state.transposed(), r.success_prob};
}

struct StepResult {
  Step step;
  CoeffMatrix state;
  double success_prob;
};

/// One iteration of `protocol` under gate noise Q. The P1/P2 decision is made on
/// the post-noise coefficients that actually enter the map.
inline StepResult protocol_step(Protocol protocol, const CoeffMatrix& s, double Q) {
  switch (protocol) {
    case Protocol::P1P2: {
      CoeffMatrix noisy = noisy_step(s, Q);
      if (choose_subroutine(noisy) == Subroutine::P1) {
        auto r = p1_map(noisy);
        return {Step::P1, std::move(r.state), r.success_prob};
      }
      auto r = p2_map(noisy);
      return {Step::P2, std::move(r.state), r.success_prob};
    }
    case Protocol::DEJMPS: {
      auto r = dejmps_map(s, Q);
      return {Step::DEJMPS, std::move(r.state), r.success_prob};
    }
    case Protocol::BBPSSW: {
      auto r = bbpssw_step(s, Q);
      return {Step::BBPSSW, std::move(r.state), r.success_prob};
    }
    case Protocol::ThreeCopy: {
      CoeffMatrix noisy = noisy_step(s, Q);
      auto r = three_copy_map(noisy, choose_subroutine(noisy));
      return {Step::ThreeCopy, std::move(r.state), r.success_prob};
    }
  }
  throw InvalidInput("unknown protocol");
}

struct TrajectoryStep {
  int iter;
  Step step;
  CoeffMatrix state;
  double success_prob;
  double cumulative_yield;
};

struct Trajectory {
  CoeffMatrix initial;
  std::vector<TrajectoryStep> steps;
  bool reached_target = false;
  bool stalled = false;

  double final_fidelity() const { return steps.empty() ? initial.fidelity() : steps.back().state.fidelity(); }
  double final_yield() const { return steps.empty() ? 1.0 : steps.back().cumulative_yield; }
};

/// Number of consecutive sub-1e-12 improvements that ends a run as stalled.
inline constexpr int kStallRun = 3;
inline constexpr double kStallTolerance = 1e-12;

/// Iterates `protocol` until fidelity >= F_target, `max_iters` iterations, or a stall.
inline Trajectory run_to_target(Protocol protocol, const CoeffMatrix& s, const NoiseParams& noise,
                                double F_target, int max_iters) {
  noise.validate();
  if (max_iters < 1) throw InvalidInput("max_iters must be >= 1");
  Trajectory traj{s, {}, false, false};
  CoeffMatrix cur = s;
  double yield = 1.0;
  int flat = 0;
  for (int it = 1; cur.fidelity() < F_target; ++it) {
    if (it > max_iters) return traj;
    StepResult r = protocol_step(protocol, cur, noise.Q);
    yield *= r.success_prob / copies_per_step(r.step);
    const double gain = r.state.fidelity() - cur.fidelity();
    cur = r.state;
    traj.steps.push_back({it, r.step, cur, r.success_prob, yield});
    flat = gain < kStallTolerance ? flat + 1 : 0;
    if (flat >= kStallRun && cur.fidelity() < F_target) {
      traj.stalled = true;
      return traj;
    }
  }
  traj.reached_target = true;
  return traj;
}

/// P1-or-P2 until F >= 1 - epsilon.
inline Trajectory p1p2_run(const CoeffMatrix& s, const NoiseParams& noise, double epsilon, int max_iters) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidInput("epsilon must lie in (0,1)");
  return run_to_target(Protocol::P1P2, s, noise, 1.0 - epsilon, max_iters);
}

/// Expected fraction of input pairs surviving as pairs with F >= F_target; 0 if never reached.
inline double yield_run(Protocol protocol, const CoeffMatrix& s, const NoiseParams& noise, double F_target,
                        int max_iters = 500) {
  if (!(F_target > 0.0 && F_target <= 1.0)) throw InvalidInput("F_target must lie in (0,1]");
  if (s.fidelity() >= F_target) return 1.0;
  Trajectory t = run_to_target(protocol, s, noise, F_target, max_iters);
  return t.reached_target ? t.final_yield() : 0.0;
}

struct PurificationRegime {
  double F_min;
  double F_max;
  bool purifiable;
};

/// Fixed points of the noisy BBPSSW map. F_min is the lower (repelling) root,
/// F_max the upper (attracting) one. Without real roots, both collapse to the
/// clamped real part and purifiable is false.
inline PurificationRegime bbpssw_fixed_points(Dimension dim, double Q) {
  if (!(Q > 0.0 && Q <= 1.0)) throw InvalidInput("Q must lie in (0,1]");
  const double d = dim.value();
  const double Q2 = Q * Q;
  const double center = Q2 * d * (d + 1.0) / (2.0 * d * d * Q2);
  const double disc =
      8.0 * Q2 * (d + 1.0) - 4.0 * (d + 1.0) * (d + 1.0) + Q2 * Q2 * (d - 1.0) * (d + 2.0) * (d + 2.0);
  const double lo = 1.0 / (d * d);
  if (!(disc > 0.0)) {
    const double c = std::clamp(center, lo, 1.0);
    return {c, c, false};
  }
  const double half = std::sqrt(d - 1.0) * std::sqrt(disc) / (2.0 * d * d * Q2);
  return {std::clamp(center - half, lo, 1.0), std::clamp(center + half, lo, 1.0), true};
}

/// Gate-noise threshold of noisy BBPSSW: the Q at which both fixed points merge.
inline double bbpssw_threshold(Dimension dim) {
  const double d = dim.value();
  const double inner = (-2.0 - 2.0 * d + std::sqrt(d * d * (d + 1.0) * (d + 1.0) * (d + 3.0))) /
                       (-4.0 + 3.0 * d * d + d * d * d);
  return std::sqrt(2.0) * std::sqrt(inner);
}

/// Large-d behaviour of bbpssw_threshold: sqrt(2) d^(-1/4).
inline double bbpssw_threshold_asymptote(Dimension dim) { return std::sqrt(2.0) * std::pow(double(dim), -0.25); }

namespace detail {

inline constexpr int kScanIterations = 200;
inline constexpr int kScanGrid = 400;
inline constexpr double kScanBisectTol = 1e-13;

/// Fidelity reached after iterating from F0, minus F0. `next` advances the
/// trajectory by one iteration and returns the new fidelity. For period-2
/// behaviour (alternating P1/P2) the larger of the last two iterates counts.
template <class Next>
double trajectory_gain(double F0, Next&& next) {
  double prev2 = F0, prev = F0, cur = F0;
  for (int i = 0; i < kScanIterations; ++i) {
    prev2 = prev;
    prev = cur;
    cur = next();
    if (std::abs(cur - prev) < kStallTolerance || (i > 0 && std::abs(cur - prev2) < kStallTolerance)) break;
  }
  return std::max(cur, prev) - F0;
}

inline double bisect_edge(const std::function<bool(double)>& inside, double outside_pt, double inside_pt) {
  for (int i = 0; i < 200 && std::abs(inside_pt - outside_pt) > kScanBisectTol; ++i) {
    const double mid = 0.5 * (outside_pt + inside_pt);
    (inside(mid) ? inside_pt : outside_pt) = mid;
  }
  return 0.5 * (outside_pt + inside_pt);
}

}  // namespace detail

/// Numeric purification regime: the interval of initial fidelities (for the given
/// state family) whose iterated noisy trajectory ends above where it started.
/// BBPSSW is scanned through its scalar fidelity map.
inline PurificationRegime regime_scan(Protocol protocol, Dimension d, double Q,
                                      PresetKind kind = PresetKind::Isotropic, double x_weight = 0.25) {
  if (!(Q > 0.0 && Q <= 1.0)) throw InvalidInput("Q must lie in (0,1]");
  std::function<double(double)> gain;
  if (protocol == Protocol::BBPSSW) {
    gain = [=](double F0) {
      double F = F0;
      return detail::trajectory_gain(F0, [&] { return F = bbpssw_map(F, d, Q); });
    };
  } else {
    const StatePreset shape{kind, 1.0, x_weight};
    gain = [=](double F0) {
      StatePreset p = shape;
      p.F = F0;
      CoeffMatrix cur = make_preset(p, d);
      return detail::trajectory_gain(F0, [&] {
        cur = protocol_step(protocol, cur, Q).state;
        return cur.fidelity();
      });
    };
  }
  const double lo = 1.0 / (double(d) * d);
  const double hi = 1.0;
  std::vector<double> grid(detail::kScanGrid), gains(detail::kScanGrid);
  int best = 0;
  for (int i = 0; i < detail::kScanGrid; ++i) {
    grid[i] = lo + (hi - lo) * (i + 0.5) / detail::kScanGrid;
    gains[i] = gain(grid[i]);
    if (gains[i] > gains[best]) best = i;
  }
  if (!(gains[best] > kStallTolerance)) return {grid[best], grid[best], false};

  auto inside = [&](double F0) { return gain(F0) > 0.0; };
  double below = lo;
  for (int i = best - 1; i >= 0; --i) {
    if (!(gains[i] > 0.0)) {
      below = grid[i];
      break;
    }
  }
  double above = hi;
  for (int i = best + 1; i < detail::kScanGrid; ++i) {
    if (!(gains[i] > 0.0)) {
      above = grid[i];
      break;
    }
  }
  const double F_min = detail::bisect_edge(inside, below, grid[best]);
  const double F_max = detail::bisect_edge(inside, above, grid[best]);
  return {F_min, F_max, F_max > F_min};
}

/// Smallest gate retention Q for which regime_scan still finds a purification regime.
inline double regime_threshold(Protocol protocol, Dimension d, PresetKind kind = PresetKind::Isotropic,
                               double x_weight = 0.25, double tol = 1e-6) {
  double lo = 0.3, hi = 1.0;
  if (regime_scan(protocol, d, lo, kind, x_weight).purifiable) return lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (regime_scan(protocol, d, mid, kind, x_weight).purifiable ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace qpurify
