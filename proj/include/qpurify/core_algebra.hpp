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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpurify {

/// Thrown when an argument violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Local dimension of a qudit. Always >= 2.
class Dimension {
 public:
  explicit Dimension(int d) : d_(d) {
    if (d < 2) throw InvalidInput("dimension must be >= 2, got " + std::to_string(d));
  }
  int value() const { return d_; }
  operator int() const { return d_; }
  friend bool operator==(Dimension a, Dimension b) { return a.d_ == b.d_; }

 private:
  int d_;
};

/// Deterministic trial division. Intended for d up to ~1e6.
inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (int64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

inline void require_prime(Dimension d, const char* where) {
  if (!is_prime(d.value())) {
    throw InvalidInput(std::string(where) + ": dimension " + std::to_string(d.value()) +
                       " is not prime (only prime d is supported)");
  }
}

/// Reduce any integer into [0, d).
inline int mod_reduce(int64_t x, int d) {
  int64_t r = x % d;
  return static_cast<int>(r < 0 ? r + d : r);
}
inline int mod_add(int a, int b, int d) { return mod_reduce(int64_t{a} + b, d); }
inline int mod_sub(int a, int b, int d) { return mod_reduce(int64_t{a} - b, d); }
inline int mod_neg(int a, int d) { return mod_reduce(-int64_t{a}, d); }

/// Label (phase, amplitude) of the maximally entangled basis state |psi_{phase,amplitude}>.
struct BellIndex {
  int phase = 0;
  int amplitude = 0;

  bool valid_for(Dimension d) const {
    return phase >= 0 && phase < d && amplitude >= 0 && amplitude < d;
  }
  friend bool operator==(const BellIndex&, const BellIndex&) = default;
};

/// Label of an N-party GHZ basis state: one phase index plus N-1 amplitude indices.
struct GhzIndex {
  int phase = 0;
  std::vector<int> amplitudes;

  int parties() const { return static_cast<int>(amplitudes.size()) + 1; }
  bool valid_for(Dimension d) const {
    if (amplitudes.empty() || phase < 0 || phase >= d) return false;
    for (int a : amplitudes) {
      if (a < 0 || a >= d) return false;
    }
    return true;
  }
  friend bool operator==(const GhzIndex&, const GhzIndex&) = default;
};

namespace detail {
inline void check_index(const BellIndex& idx, Dimension d, const char* what) {
  if (!idx.valid_for(d)) {
    throw InvalidInput(std::string(what) + " index (" + std::to_string(idx.phase) + "," +
                       std::to_string(idx.amplitude) + ") is not valid for d=" +
                       std::to_string(d.value()));
  }
}
}  // namespace detail

/// Index action of the bilateral GXOR from `control` onto `target`:
/// (k1, j1), (k2, j2) -> (k1 + k2, j1), (-k2, j1 - j2), all mod d.
inline std::pair<BellIndex, BellIndex> bgxor_index_map(const BellIndex& control,
                                                       const BellIndex& target, Dimension d) {
  detail::check_index(control, d, "control");
  detail::check_index(target, d, "target");
  return {BellIndex{mod_add(control.phase, target.phase, d), control.amplitude},
          BellIndex{mod_neg(target.phase, d), mod_sub(control.amplitude, target.amplitude, d)}};
}

/// Bilateral QFT exchanges phase and amplitude labels.
inline BellIndex bqft_index_map(const BellIndex& idx) { return BellIndex{idx.amplitude, idx.phase}; }

/// Label reached by applying Lambda_{ab} = X^b Z^a to party B of |psi_idx> (global phase dropped).
inline BellIndex pauli_on_bell(int a, int b, const BellIndex& idx, Dimension d) {
  if (a < 0 || a >= d || b < 0 || b >= d) {
    throw InvalidInput("pauli exponents must lie in [0,d)");
  }
  detail::check_index(idx, d, "bell");
  return BellIndex{mod_add(idx.phase, a, d), mod_add(idx.amplitude, b, d)};
}

/// Integer power for small exponents, with overflow guard.
inline int64_t ipow(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (int64_t{1} << 52) / base) throw InvalidInput("integer power overflow");
    r *= base;
  }
  return r;
}

}  // namespace qpurify
