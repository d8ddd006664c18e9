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

// Hashing / breeding analysis for Bell-diagonal qudit ensembles.
//
// All entropies are base d. The finite-size bound follows the Bennett
// concentration inequality: p1 bounds the chance that the error string is
// atypical, p2 = d^(-n delta) bounds the chance that a wrong typical string
// survives every parity check.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qpurify/core_algebra.hpp"
#include "qpurify/states.hpp"

namespace qpurify {

namespace detail {
inline double xlogd(double x, double ln_d) { return x > 0.0 ? x * std::log(x) / ln_d : 0.0; }
}  // namespace detail

/// Base-d von Neumann entropy of a Bell-diagonal state (0 log 0 = 0).
inline double entropy_based(const CoeffMatrix& s) {
  const double ln_d = std::log(double(s.d()));
  double S = 0.0;
  for (double a : s.data()) S -= detail::xlogd(a, ln_d);
  return S;
}

/// Closed form of entropy_based for an isotropic state; works for large d.
inline double isotropic_entropy(Dimension dim, double F) {
  const double d = dim.value();
  const double ln_d = std::log(d);
  const double tail = (1.0 - F) / (d * d - 1.0);
  return -detail::xlogd(F, ln_d) - (d * d - 1.0) * detail::xlogd(tail, ln_d);
}

inline double asymptotic_yield(const CoeffMatrix& s) { return std::max(0.0, 1.0 - entropy_based(s)); }

/// Smallest isotropic fidelity with positive asymptotic hashing yield (S = 1).
inline double min_fidelity(Dimension d) {
  require_prime(d, "min_fidelity");
  double lo = 1.0 / (double(d) * d);  // S = 2 here
  double hi = 1.0;                    // S = 0 here
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (isotropic_entropy(d, mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// How the finite-size slack delta is chosen.
struct DeltaPolicy {
  enum class Kind { Fixed, NPow, NToOne };
  Kind kind = Kind::NPow;
  double value = -0.25;  // delta for Fixed, exponent for NPow

  static DeltaPolicy fixed(double delta) { return {Kind::Fixed, delta}; }
  static DeltaPolicy npow(double exponent) { return {Kind::NPow, exponent}; }
  static DeltaPolicy n_to_1() { return {Kind::NToOne, 0.0}; }

  /// n -> 1 measures every pair but one: r = n - 1.
  double delta(double n, double S) const {
    switch (kind) {
      case Kind::Fixed: return value;
      case Kind::NPow: return std::pow(n, value);
      case Kind::NToOne: return 0.5 * ((n - 1.0) / n - S);
    }
    return value;
  }

  std::string describe() const {
    switch (kind) {
      case Kind::Fixed: return "fixed:" + std::to_string(value);
      case Kind::NPow: return "npow:" + std::to_string(value);
      case Kind::NToOne: return "n_to_1";
    }
    return "?";
  }
};

struct HashingReport {
  int d = 2;
  double n = 0;  // number of input pairs
  double F = 1.0;
  double delta = 0.0;
  double S = 0.0;
  double r = 0.0;  // parity measurements, ceil(n (S + 2 delta))
  double yield = 0.0;
  double yield_raw = 0.0;
  double p1_bound = 0.0;
  double p2 = 0.0;
  double F_out_bound = 0.0;
  double F_out_bound_raw = 0.0;
  bool feasible = true;
};

/// Bennett-inequality tail bound for the atypical-string probability.
/// Returns 0 for a pure input, where the entropy variance vanishes.
inline double atypical_bound(Dimension dim, double n, double F, double delta) {
  if (F >= 1.0) return 0.0;
  const double d = dim.value();
  const double ln_d = std::log(d);
  const double S = isotropic_entropy(dim, F);
  const double log_tail = std::log((1.0 - F) / (d * d - 1.0)) / ln_d;
  const double log_F = F > 0.0 ? std::log(F) / ln_d : 0.0;
  const double a = std::abs(log_tail) + S;
  const double g = (F * log_F * log_F + (1.0 - F) * log_tail * log_tail - S * S) / a;
  if (!(g > 0.0)) return 0.0;
  const double h = (g + delta) * std::log1p(delta / g) - delta;
  return 2.0 * std::exp(-n / a * h);
}

inline HashingReport finite_size_report(Dimension d, double n, double F, const DeltaPolicy& policy) {
  require_prime(d, "finite_size_report");
  if (!(n >= 2.0)) throw InvalidInput("n must be >= 2");
  const double lo = 1.0 / (double(d) * d);
  if (!(F > lo && F <= 1.0)) throw InvalidInput("F must lie in (1/d^2, 1]");

  HashingReport rep;
  rep.d = d.value();
  rep.n = n;
  rep.F = F;
  rep.S = isotropic_entropy(d, F);
  rep.delta = policy.delta(n, rep.S);
  if (!(rep.delta > 0.0)) {
    rep.feasible = false;
    rep.yield_raw = 1.0 - rep.S - 2.0 * rep.delta;
    rep.yield = 0.0;
    rep.r = std::ceil(n * (rep.S + 2.0 * rep.delta) - 1e-9);
    rep.p1_bound = 1.0;
    rep.p2 = 1.0;
    rep.F_out_bound_raw = 1.0 - rep.p1_bound - rep.p2;
    rep.F_out_bound = 0.0;
    return rep;
  }
  // Tolerance keeps exact products such as n (S + 2 delta) = n - 1 from rounding up.
  rep.r = std::ceil(n * (rep.S + 2.0 * rep.delta) - 1e-9);
  rep.yield_raw = 1.0 - rep.S - 2.0 * rep.delta;
  rep.yield = std::clamp(rep.yield_raw, 0.0, 1.0);
  rep.p1_bound = atypical_bound(d, n, F, rep.delta);
  rep.p2 = std::exp(-n * rep.delta * std::log(double(d)));
  rep.F_out_bound_raw = 1.0 - rep.p1_bound - rep.p2;
  rep.F_out_bound = std::clamp(rep.F_out_bound_raw, 0.0, 1.0);
  // Every pair consumed by parity checks: nothing left to output.
  if (rep.r >= n) rep.feasible = false;
  return rep;
}

struct NoisyThresholds {
  double F_min;
  double p_min;  // smallest effective transmission parameter p q^2
  double q_min;  // largest tolerable per-particle resource noise is 1 - q_min
};

/// Thresholds for measurement-based hashing with noisy resources,
/// using F = p^2 + (1 - p^2) / d^2.
inline NoisyThresholds noisy_thresholds(Dimension d) {
  const double F_min = min_fidelity(d);
  const double inv_d2 = 1.0 / (double(d) * d);
  if (!(F_min > inv_d2)) throw InvalidInput("minimal fidelity at or below 1/d^2");
  const double p_min = std::sqrt((F_min - inv_d2) / (1.0 - inv_d2));
  return {F_min, p_min, std::sqrt(p_min)};
}

/// Isotropic fidelity produced by effective per-particle parameter p.
inline double fidelity_from_p(Dimension d, double p) {
  const double inv_d2 = 1.0 / (double(d) * d);
  return p * p + (1.0 - p * p) * inv_d2;
}

/// Asymptotic hashing yield when transmission p and resource noise q act on isotropic pairs.
inline double noisy_asymptotic_yield(Dimension d, double p, double q) {
  require_prime(d, "noisy_asymptotic_yield");
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0)) throw InvalidInput("p, q must lie in [0,1]");
  return std::max(0.0, 1.0 - isotropic_entropy(d, fidelity_from_p(d, p * q * q)));
}

/// Universal measurement-based threshold ((d-1)/(d^2-1))^(1/4) = (d+1)^(-1/4).
inline double universal_threshold(Dimension dim) {
  const double d = dim.value();
  return std::pow((d - 1.0) / (d * d - 1.0), 0.25);
}

struct CollisionEstimate {
  int64_t trials = 0;
  int64_t hits = 0;
  double rate = 0.0;
  double expected = 0.0;
  double sigma = 0.0;  // binomial standard deviation of the rate under `expected`

  bool within(double k_sigma) const { return std::abs(rate - expected) <= k_sigma * sigma; }
};

namespace detail {
inline constexpr int64_t kMonteCarloChunk = 4096;
}

/// Empirical probability that two distinct random strings in Z_d^(2n) agree on the
/// parity s . x (mod d) of a uniformly random subset vector s.
///
/// Trials are split into fixed-size chunks, each with its own seed stream derived
/// from (seed, chunk index), so the result does not depend on `threads`.
inline CollisionEstimate lemma1_montecarlo(Dimension dim, int n, int64_t trials, uint64_t seed,
                                           unsigned threads = 1) {
  require_prime(dim, "lemma1_montecarlo");
  if (n < 1) throw InvalidInput("n must be >= 1");
  if (trials < 10000) throw InvalidInput("trials must be >= 1e4");
  const int d = dim.value();
  const int len = 2 * n;
  const int64_t chunks = (trials + detail::kMonteCarloChunk - 1) / detail::kMonteCarloChunk;

  auto run_chunk = [&](int64_t c) -> int64_t {
    std::seed_seq sq{uint32_t(seed), uint32_t(seed >> 32), uint32_t(c), uint32_t(c >> 32)};
    std::mt19937_64 rng(sq);
    std::uniform_int_distribution<int> sym(0, d - 1);
    std::vector<int> x(len), y(len);
    const int64_t begin = c * detail::kMonteCarloChunk;
    const int64_t count = std::min(detail::kMonteCarloChunk, trials - begin);
    int64_t hits = 0;
    for (int64_t t = 0; t < count; ++t) {
      for (int& v : x) v = sym(rng);
      do {
        for (int& v : y) v = sym(rng);
      } while (x == y);
      int64_t acc = 0;
      for (int i = 0; i < len; ++i) acc += int64_t(sym(rng)) * (x[i] - y[i]);
      if (mod_reduce(acc, d) == 0) ++hits;
    }
    return hits;
  };

  std::vector<int64_t> per_chunk(chunks, 0);
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (int64_t c = 0; c < chunks; ++c) per_chunk[c] = run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (int64_t c = w; c < chunks; c += threads) per_chunk[c] = run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  CollisionEstimate est;
  est.trials = trials;
  for (int64_t h : per_chunk) est.hits += h;
  est.rate = double(est.hits) / double(trials);
  est.expected = 1.0 / d;
  est.sigma = std::sqrt(est.expected * (1.0 - est.expected) / double(trials));
  return est;
}

}  // namespace qpurify
