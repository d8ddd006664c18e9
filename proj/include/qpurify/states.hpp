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

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpurify/core_algebra.hpp"

namespace qpurify {

/// Tolerances shared by every coefficient-space map.
inline constexpr double kNegativeSlack = 1e-12;
inline constexpr double kRenormalizeBelow = 1e-12;
inline constexpr double kHardNormError = 1e-9;

/// Bell-diagonal two-qudit state: alpha(k, j) is the weight of |psi_{k,j}>,
/// row k = phase index, column j = amplitude index.
///
/// Every instance satisfies: entries >= 0 and sum == 1 (within 1e-12).
/// Construction from raw data renormalizes drift up to 1e-9 and rejects
/// anything larger, and clamps entries in [-1e-12, 0) to zero.
class CoeffMatrix {
 public:
  CoeffMatrix(Dimension d, std::vector<double> row_major) : d_(d), alpha_(std::move(row_major)) {
    const size_t n = static_cast<size_t>(d.value()) * d.value();
    if (alpha_.size() != n) {
      throw InvalidInput("coefficient matrix needs " + std::to_string(n) + " entries, got " +
                         std::to_string(alpha_.size()));
    }
    normalize_or_throw();
  }

  static CoeffMatrix uniform(Dimension d) {
    const double v = 1.0 / (double(d) * double(d));
    return CoeffMatrix(d, std::vector<double>(size_t(d) * size_t(d), v));
  }

  static CoeffMatrix pure(Dimension d) {
    std::vector<double> a(size_t(d) * size_t(d), 0.0);
    a[0] = 1.0;
    return CoeffMatrix(d, std::move(a));
  }

  Dimension dim() const { return d_; }
  int d() const { return d_.value(); }

  double operator()(int phase, int amplitude) const { return alpha_[size_t(phase) * d() + amplitude]; }
  double at(const BellIndex& idx) const { return (*this)(idx.phase, idx.amplitude); }

  std::span<const double> data() const { return alpha_; }

  double fidelity() const { return alpha_[0]; }

  /// Sum over phase index with amplitude 0 (states free of X errors).
  double column0_sum() const {
    double s = 0.0;
    for (int k = 0; k < d(); ++k) s += (*this)(k, 0);
    return s;
  }
  /// Sum over amplitude index with phase 0 (states free of Z errors).
  double row0_sum() const {
    double s = 0.0;
    for (int j = 0; j < d(); ++j) s += (*this)(0, j);
    return s;
  }

  /// Phase <-> amplitude exchange, the coefficient image of a bilateral QFT.
  CoeffMatrix transposed() const {
    std::vector<double> t(alpha_.size());
    for (int k = 0; k < d(); ++k)
      for (int j = 0; j < d(); ++j) t[size_t(j) * d() + k] = (*this)(k, j);
    return CoeffMatrix(d_, std::move(t));
  }

  double max_abs_diff(const CoeffMatrix& other) const {
    if (!(other.d_ == d_)) throw InvalidInput("dimension mismatch");
    double m = 0.0;
    for (size_t i = 0; i < alpha_.size(); ++i) m = std::max(m, std::abs(alpha_[i] - other.alpha_[i]));
    return m;
  }

 private:
  void normalize_or_throw() {
    double sum = 0.0;
    for (double& a : alpha_) {
      if (!std::isfinite(a)) throw InvalidInput("coefficient is not finite");
      if (a < -kNegativeSlack) throw InvalidInput("negative coefficient " + std::to_string(a));
      if (a < 0.0) a = 0.0;
      sum += a;
    }
    const double drift = std::abs(sum - 1.0);
    if (drift > kHardNormError) {
      throw InvalidInput("coefficients sum to " + std::to_string(sum) + ", expected 1");
    }
    if (drift > kRenormalizeBelow) {
      for (double& a : alpha_) a /= sum;
    }
  }

  Dimension d_;
  std::vector<double> alpha_;
};

enum class PresetKind { Isotropic, XOnly, ZOnly, XZMixture };

inline std::string_view to_string(PresetKind k) {
  switch (k) {
    case PresetKind::Isotropic: return "isotropic";
    case PresetKind::XOnly: return "x_only";
    case PresetKind::ZOnly: return "z_only";
    case PresetKind::XZMixture: return "xz_mixture";
  }
  return "?";
}

inline PresetKind parse_preset_kind(std::string_view s) {
  if (s == "isotropic") return PresetKind::Isotropic;
  if (s == "x_only") return PresetKind::XOnly;
  if (s == "z_only") return PresetKind::ZOnly;
  if (s == "xz_mixture") return PresetKind::XZMixture;
  throw InvalidInput("unknown preset '" + std::string(s) + "'");
}

struct StatePreset {
  PresetKind kind = PresetKind::Isotropic;
  double F = 1.0;
  double x_weight = 0.25;  // xz_mixture only
};

inline CoeffMatrix make_preset(const StatePreset& p, Dimension dim) {
  if (!(p.F >= 0.0 && p.F <= 1.0)) throw InvalidInput("fidelity must lie in [0,1]");
  if (!(p.x_weight >= 0.0 && p.x_weight <= 1.0)) throw InvalidInput("x_weight must lie in [0,1]");
  const int d = dim.value();
  const double rest = 1.0 - p.F;
  std::vector<double> a(size_t(d) * d, 0.0);
  auto at = [&](int k, int j) -> double& { return a[size_t(k) * d + j]; };
  switch (p.kind) {
    case PresetKind::Isotropic: {
      const double t = rest / (double(d) * d - 1.0);
      for (double& v : a) v = t;
      break;
    }
    case PresetKind::XOnly:
      for (int j = 1; j < d; ++j) at(0, j) = rest / (d - 1);
      break;
    case PresetKind::ZOnly:
      for (int k = 1; k < d; ++k) at(k, 0) = rest / (d - 1);
      break;
    case PresetKind::XZMixture:
      for (int j = 1; j < d; ++j) at(0, j) = p.x_weight * rest / (d - 1);
      for (int k = 1; k < d; ++k) at(k, 0) = (1.0 - p.x_weight) * rest / (d - 1);
      break;
  }
  at(0, 0) = p.F;
  return CoeffMatrix(dim, std::move(a));
}

inline CoeffMatrix isotropic(Dimension d, double F) { return make_preset({PresetKind::Isotropic, F}, d); }

/// Coefficient action of a single-qudit depolarizing channel with the given retention
/// probability on one half of a Bell-diagonal pair.
inline CoeffMatrix depolarize_channel(const CoeffMatrix& s, double retention) {
  if (!(retention >= 0.0 && retention <= 1.0)) throw InvalidInput("retention must lie in [0,1]");
  const double u = (1.0 - retention) / (double(s.d()) * s.d());
  std::vector<double> a(s.data().begin(), s.data().end());
  for (double& v : a) v = retention * v + u;
  return CoeffMatrix(s.dim(), std::move(a));
}

/// Full U (x) U* twirl: keeps the fidelity, spreads the rest uniformly.
inline CoeffMatrix twirl_isotropic(const CoeffMatrix& s) { return isotropic(s.dim(), s.fidelity()); }

inline double fidelity(const CoeffMatrix& s) { return s.fidelity(); }

/// Isotropic mixing parameter alpha(F) = (d^2 F - 1) / (d^2 - 1).
inline double isotropic_alpha(Dimension d, double F) {
  const double d2 = double(d) * d;
  return (d2 * F - 1.0) / (d2 - 1.0);
}

/// Inverse of isotropic_alpha: F = alpha + (1 - alpha) / d^2.
inline double isotropic_fidelity(Dimension d, double alpha) {
  const double d2 = double(d) * d;
  return alpha + (1.0 - alpha) / d2;
}

}  // namespace qpurify
