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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "qpurify/core_algebra.hpp"
#include "qpurify/states.hpp"

namespace qpurify {

/// GHZ-diagonal N-party state. Entries are laid out mixed-radix, row-major,
/// phase index slowest: flat = ((m * d + l1) * d + l2) ... + l_{N-1}.
class GhzCoeffs {
 public:
  GhzCoeffs(Dimension d, int parties, std::vector<double> alpha)
      : d_(d), parties_(parties), alpha_(std::move(alpha)) {
    if (parties < 2) throw InvalidInput("GHZ states need N >= 2 parties");
    const auto expect = static_cast<size_t>(ipow(d.value(), parties));
    if (alpha_.size() != expect) {
      throw InvalidInput("GHZ coefficient vector needs d^N = " + std::to_string(expect) + " entries");
    }
    double sum = 0.0;
    for (double& a : alpha_) {
      if (!std::isfinite(a) || a < -kNegativeSlack) throw InvalidInput("GHZ coefficient negative or not finite");
      if (a < 0.0) a = 0.0;
      sum += a;
    }
    if (std::abs(sum - 1.0) > kHardNormError) throw InvalidInput("GHZ coefficients must sum to 1");
    if (std::abs(sum - 1.0) > kRenormalizeBelow)
      for (double& a : alpha_) a /= sum;
  }

  Dimension dim() const { return d_; }
  int d() const { return d_.value(); }
  int parties() const { return parties_; }
  std::span<const double> data() const { return alpha_; }
  double fidelity() const { return alpha_[0]; }

  size_t flat_index(const GhzIndex& idx) const {
    if (!idx.valid_for(d_) || idx.parties() != parties_) throw InvalidInput("GHZ index does not fit this state");
    size_t f = size_t(idx.phase);
    for (int a : idx.amplitudes) f = f * d() + a;
    return f;
  }
  double at(const GhzIndex& idx) const { return alpha_[flat_index(idx)]; }

  /// Digit `slot` of a flat index: slot 0 = phase, slot i = amplitude l_i.
  int digit(size_t flat, int slot) const {
    for (int s = parties_ - 1; s > slot; --s) flat /= size_t(d());
    return int(flat % size_t(d()));
  }

 private:
  Dimension d_;
  int parties_;
  std::vector<double> alpha_;
};

inline GhzCoeffs ghz_isotropic(Dimension d, int parties, double F) {
  if (parties < 2) throw InvalidInput("GHZ states need N >= 2 parties");
  const double size = double(ipow(d.value(), parties));
  if (!(F >= 1.0 / size - 1e-15 && F <= 1.0)) throw InvalidInput("F must lie in [1/d^N, 1]");
  std::vector<double> a(size_t(size), (1.0 - F) / (size - 1.0));
  a[0] = F;
  return GhzCoeffs(d, parties, std::move(a));
}

struct IndexEntropies {
  double H0 = 0.0;          // phase index
  double Hmax_amp = 0.0;    // worst amplitude index
  std::vector<std::vector<double>> marginals;  // [slot][value], slot 0 = phase
  bool independent_marginals = true;           // joint == product of marginals (1e-12)
};

/// Single-index marginals of a GHZ-diagonal state and their base-d Shannon entropies.
inline IndexEntropies index_entropies(const GhzCoeffs& s) {
  const int d = s.d();
  const int N = s.parties();
  IndexEntropies out;
  out.marginals.assign(N, std::vector<double>(d, 0.0));
  for (size_t f = 0; f < s.data().size(); ++f)
    for (int slot = 0; slot < N; ++slot) out.marginals[slot][s.digit(f, slot)] += s.data()[f];

  const double ln_d = std::log(double(d));
  auto shannon = [&](const std::vector<double>& p) {
    double H = 0.0;
    for (double v : p)
      if (v > 0.0) H -= v * std::log(v) / ln_d;
    return H;
  };
  out.H0 = shannon(out.marginals[0]);
  for (int slot = 1; slot < N; ++slot) out.Hmax_amp = std::max(out.Hmax_amp, shannon(out.marginals[slot]));

  for (size_t f = 0; f < s.data().size() && out.independent_marginals; ++f) {
    double prod = 1.0;
    for (int slot = 0; slot < N; ++slot) prod *= out.marginals[slot][s.digit(f, slot)];
    if (std::abs(prod - s.data()[f]) > 1e-12) out.independent_marginals = false;
  }
  return out;
}

/// Asymptotic multipartite hashing yield 1 - H(phase) - max_i H(amplitude_i), clamped at 0.
inline double multipartite_yield(const GhzCoeffs& s) {
  require_prime(s.dim(), "multipartite_yield");
  const auto e = index_entropies(s);
  return std::max(0.0, 1.0 - e.H0 - e.Hmax_amp);
}

/// Closed form of multipartite_yield(ghz_isotropic(d, N, F)), clamped at 0.
inline double isotropic_yield_formula(Dimension dim, int parties, double F) {
  require_prime(dim, "isotropic_yield_formula");
  if (parties < 2) throw InvalidInput("GHZ states need N >= 2 parties");
  const double d = dim.value();
  const double dN = double(ipow(dim.value(), parties));
  const double dN1 = dN / d;
  if (!(F >= 1.0 / dN - 1e-15 && F <= 1.0)) throw InvalidInput("F must lie in [1/d^N, 1]");
  const double pa = F + (1.0 - F) * (dN1 - 1.0) / (dN - 1.0);
  const double pb = (1.0 - F) * dN1 / (dN - 1.0);
  const double ln_d = std::log(d);
  auto plogp = [&](double p) { return p > 0.0 ? p * std::log(p) / ln_d : 0.0; };
  return std::max(0.0, 1.0 + 2.0 * (plogp(pa) + (d - 1.0) * plogp(pb)));
}

}  // namespace qpurify
