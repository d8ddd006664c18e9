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

// Brute-force density-matrix simulator used as ground truth for the
// coefficient-space maps. Nothing here reuses the coefficient formulas: states
// are built from explicit basis vectors, gates act on computational-basis
// digits, and coefficients are read back as Bell-basis expectation values.
//
// Conventions, fixed once:
//   |psi_{m,n}> = d^{-1/2} sum_r w^{m r} |r>_A |r - n>_B,  w = exp(2 pi i / d)
//   X|j> = |j - 1>,  Z|j> = w^j |j>,  Lambda_{k,j} = X^j Z^k
//   GXOR_{c->t} |x>_c |y>_t = |x>_c |x - y>_t
// With these, the bilateral GXOR acts on labels exactly as bgxor_index_map
// (no phase is even produced). The literal bilateral QFT (QFT on A, QFT* on B)
// sends |psi_{m,n}> to |psi_{n,-m}>: a swap up to negating one label, which
// every recurrence map is insensitive to.
//
// Qudit ordering: pair-major (A1, B1, A2, B2, ...), qudit 0 is the most
// significant digit of a basis index.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qpurify/core_algebra.hpp"
#include "qpurify/states.hpp"

namespace qpurify::oracle {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Requested simulation would exceed the oracle's size caps.
class SizeLimitError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

inline cplx root_of_unity(int d, int64_t power) {
  const double angle = 2.0 * std::numbers::pi * double(mod_reduce(power, d)) / d;
  return {std::cos(angle), std::sin(angle)};
}

// ---- single-qudit operators ------------------------------------------------

inline Matrix shift_x(int d) {
  Matrix X = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) X(mod_sub(j, 1, d), j) = 1.0;
  return X;
}

inline Matrix phase_z(int d) {
  Matrix Z = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) Z(j, j) = root_of_unity(d, j);
  return Z;
}

/// Lambda_{k,j} = X^j Z^k.
inline Matrix pauli(int d, int k, int j) {
  Matrix out = Matrix::Identity(d, d);
  const Matrix X = shift_x(d), Z = phase_z(d);
  for (int i = 0; i < j; ++i) out = X * out;
  Matrix Zk = Matrix::Identity(d, d);
  for (int i = 0; i < k; ++i) Zk = Z * Zk;
  return out * Zk;
}

/// QFT|m> = d^{-1/2} sum_n w^{m n} |n>.
inline Matrix qft(int d) {
  Matrix F(d, d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m) F(n, m) = root_of_unity(d, int64_t(m) * n) / std::sqrt(double(d));
  return F;
}

// ---- basis states -----------------------------------------------------------

inline Vector bell_state(int d, const BellIndex& idx) {
  Vector v = Vector::Zero(Index(d) * d);
  for (int r = 0; r < d; ++r) v(Index(r) * d + mod_sub(r, idx.amplitude, d)) += root_of_unity(d, int64_t(idx.phase) * r);
  return v / std::sqrt(double(d));
}

/// Columns are |psi_{k,j}> at column k * d + j.
inline Matrix bell_basis(int d) {
  Matrix V(Index(d) * d, Index(d) * d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) V.col(Index(k) * d + j) = bell_state(d, {k, j});
  return V;
}

/// GHZ basis state with qudit order (A, B, C, ...).
inline Vector ghz_state(int d, const GhzIndex& idx) {
  const int N = idx.parties();
  Vector v = Vector::Zero(ipow(d, N));
  for (int r = 0; r < d; ++r) {
    Index flat = r;
    for (int a : idx.amplitudes) flat = flat * d + mod_sub(r, a, d);
    v(flat) += root_of_unity(d, int64_t(idx.phase) * r);
  }
  return v / std::sqrt(double(d));
}

inline Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// ---- gate application -------------------------------------------------------

/// Digit layout of an `nq`-qudit register.
struct Register {
  int d;
  int nq;

  Index size() const { return ipow(d, nq); }
  Index stride(int q) const { return ipow(d, nq - 1 - q); }
  int digit(Index i, int q) const { return int((i / stride(q)) % d); }
  Index with_digit(Index i, int q, int v) const { return i + (Index(v) - digit(i, q)) * stride(q); }
};

/// Image of every basis index under GXOR_{c->t}.
inline std::vector<Index> gxor_permutation(const Register& reg, int control, int target) {
  std::vector<Index> perm(reg.size());
  for (Index i = 0; i < reg.size(); ++i)
    perm[i] = reg.with_digit(i, target, mod_sub(reg.digit(i, control), reg.digit(i, target), reg.d));
  return perm;
}

inline Vector permute(const Vector& v, const std::vector<Index>& perm) {
  Vector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(perm[i]) = v(i);
  return out;
}

inline Matrix permute(const Matrix& rho, const std::vector<Index>& perm) {
  Matrix out(rho.rows(), rho.cols());
  for (Index j = 0; j < rho.cols(); ++j)
    for (Index i = 0; i < rho.rows(); ++i) out(perm[i], perm[j]) = rho(i, j);
  return out;
}

inline Vector apply_local(const Vector& v, const Register& reg, int q, const Matrix& U) {
  Vector out = Vector::Zero(v.size());
  const Index s = reg.stride(q);
  for (Index i = 0; i < v.size(); ++i) {
    const int x = reg.digit(i, q);
    const Index base = i - Index(x) * s;
    for (int y = 0; y < reg.d; ++y) out(i) += U(x, y) * v(base + Index(y) * s);
  }
  return out;
}

/// rho -> U_q rho U_q^dagger without forming the full operator.
inline Matrix apply_local(const Matrix& rho, const Register& reg, int q, const Matrix& U) {
  const Index D = rho.rows();
  const Index s = reg.stride(q);
  Matrix tmp = Matrix::Zero(D, D);
  for (Index i = 0; i < D; ++i) {
    const int x = reg.digit(i, q);
    const Index base = i - Index(x) * s;
    for (int y = 0; y < reg.d; ++y) tmp.row(i) += U(x, y) * rho.row(base + Index(y) * s);
  }
  Matrix out = Matrix::Zero(D, D);
  for (Index j = 0; j < D; ++j) {
    const int x = reg.digit(j, q);
    const Index base = j - Index(x) * s;
    for (int y = 0; y < reg.d; ++y) out.col(j) += std::conj(U(x, y)) * tmp.col(base + Index(y) * s);
  }
  return out;
}

// ---- dense states -----------------------------------------------------------

struct DenseState {
  Register reg;
  int pairs;  // qudits 2p, 2p+1 hold party A and B of pair p
  Matrix rho;
};

struct PhysicalityReport {
  double trace_error;
  double hermiticity_error;
  double min_eigenvalue;

  bool ok() const { return trace_error < 1e-10 && hermiticity_error < 1e-10 && min_eigenvalue >= -1e-9; }
};

inline PhysicalityReport check_physical(const Matrix& rho) {
  PhysicalityReport r;
  r.trace_error = std::abs(rho.trace() - cplx(1.0));
  r.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  return r;
}

/// Single Bell-diagonal pair as a d^2 x d^2 density matrix.
inline Matrix bell_diagonal_matrix(const CoeffMatrix& c) {
  const int d = c.d();
  Matrix rho = Matrix::Zero(Index(d) * d, Index(d) * d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      const Vector v = bell_state(d, {k, j});
      rho += c(k, j) * (v * v.adjoint());
    }
  return rho;
}

/// Bell-basis diagonal of a pair density matrix, read back as coefficients.
inline CoeffMatrix bell_coefficients(const Matrix& rho_pair, int d) {
  std::vector<double> a(size_t(d) * d);
  double tr = 0.0;
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      const Vector v = bell_state(d, {k, j});
      const double val = (v.adjoint() * rho_pair * v)(0, 0).real();
      a[size_t(k) * d + j] = val;
      tr += val;
    }
  for (double& v : a) v /= tr;
  return CoeffMatrix(Dimension(d), std::move(a));
}

inline void check_size(int d, int pairs) {
  const bool ok = (pairs == 1 && d <= 16) || (pairs == 2 && d <= 5) || (pairs == 3 && d <= 3);
  if (!ok) {
    throw SizeLimitError("oracle size limit: " + std::to_string(pairs) + " pair(s) at d=" + std::to_string(d) +
                         " (caps: 1 pair d<=16, 2 pairs d<=5, 3 pairs d<=3)");
  }
}

/// Tensor product of `pairs` identical Bell-diagonal pairs.
inline DenseState build_bell_pairs(const CoeffMatrix& coeffs, int pairs) {
  const int d = coeffs.d();
  if (pairs < 1) throw InvalidInput("need at least one pair");
  check_size(d, pairs);
  const Matrix one = bell_diagonal_matrix(coeffs);
  Matrix rho = one;
  for (int p = 1; p < pairs; ++p) rho = kron(rho, one);
  return DenseState{Register{d, 2 * pairs}, pairs, std::move(rho)};
}

/// Kraus form of the depolarizing channel on one qudit:
/// rho -> a rho + (1 - a)/d^2 sum_{k,j} Lambda_{kj} rho Lambda_{kj}^dagger.
inline Matrix depolarize_qudit(const Matrix& rho, const Register& reg, int q, double retention) {
  Matrix mix = Matrix::Zero(rho.rows(), rho.cols());
  for (int k = 0; k < reg.d; ++k)
    for (int j = 0; j < reg.d; ++j) mix += apply_local(rho, reg, q, pauli(reg.d, k, j));
  return retention * rho + (1.0 - retention) / (double(reg.d) * reg.d) * mix;
}

enum class Variant { P1, P2, ThreeCopy, ThreeCopyP2 };

struct RecurrenceOutcome {
  CoeffMatrix kept;
  double success_prob;
  std::vector<double> class_probs;  // indexed by outcome-difference class; class 0 is kept
};

namespace detail {

/// Unnormalized states of pair 0 after Z measurements of every other qudit,
/// grouped by the tuple of A/B outcome differences of the measured pairs.
inline std::vector<Matrix> reduce_by_outcome_class(const DenseState& s) {
  const Register& reg = s.reg;
  const int d = reg.d;
  const Index kept_dim = Index(d) * d;
  const Index tail = reg.size() / kept_dim;
  const int measured_pairs = s.pairs - 1;
  std::vector<Matrix> out(ipow(d, measured_pairs), Matrix::Zero(kept_dim, kept_dim));
  for (Index t = 0; t < tail; ++t) {
    Index cls = 0;
    for (int p = 1; p < s.pairs; ++p) {
      const int zeta = reg.digit(t, 2 * p), xi = reg.digit(t, 2 * p + 1);
      cls = cls * d + mod_sub(zeta, xi, d);
    }
    // t enumerates measured digits directly since pair 0 occupies the leading digits.
    for (Index a = 0; a < kept_dim; ++a)
      for (Index b = 0; b < kept_dim; ++b) out[cls](a, b) += s.rho(a * tail + t, b * tail + t);
  }
  return out;
}

}  // namespace detail

/// Runs one recurrence round literally: (bQFT), bilateral GXORs from pair 0 onto the
/// other pairs, Z measurements on both sides of every target, post-selection on all
/// outcome differences being 0, (inverse bQFT) on the kept pair.
inline RecurrenceOutcome simulate_recurrence_step(const DenseState& input, Variant variant) {
  const bool three = variant == Variant::ThreeCopy || variant == Variant::ThreeCopyP2;
  const bool fourier = variant == Variant::P2 || variant == Variant::ThreeCopyP2;
  if (input.pairs != (three ? 3 : 2)) throw InvalidInput("state has the wrong number of pairs for this variant");
  const int d = input.reg.d;
  check_size(d, input.pairs);

  DenseState s = input;
  const Matrix F = qft(d);
  const Matrix Fc = F.conjugate();
  if (fourier) {
    for (int p = 0; p < s.pairs; ++p) {
      s.rho = apply_local(s.rho, s.reg, 2 * p, F);
      s.rho = apply_local(s.rho, s.reg, 2 * p + 1, Fc);
    }
  }
  for (int p = 1; p < s.pairs; ++p) {
    s.rho = permute(s.rho, gxor_permutation(s.reg, 0, 2 * p));
    s.rho = permute(s.rho, gxor_permutation(s.reg, 1, 2 * p + 1));
  }
  std::vector<Matrix> classes = detail::reduce_by_outcome_class(s);

  std::vector<double> probs;
  probs.reserve(classes.size());
  for (const Matrix& m : classes) probs.push_back(m.trace().real());

  Matrix kept = classes[0];
  if (fourier) {
    const Register pair{d, 2};
    kept = apply_local(kept, pair, 0, F.adjoint());
    kept = apply_local(kept, pair, 1, Fc.adjoint());
  }
  return {bell_coefficients(kept, d), probs[0], std::move(probs)};
}

// ---- label-level checks of the index maps -----------------------------------

/// Basis label whose projector matches `v` (|overlap| = 1 within tol), if any.
inline std::optional<BellIndex> identify_bell(const Vector& v, int d, double tol = 1e-10) {
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      if (std::abs(std::abs(bell_state(d, {k, j}).dot(v)) - 1.0) < tol) return BellIndex{k, j};
  return std::nullopt;
}

/// Physical bilateral GXOR on |psi_c>|psi_t>, labels read back from projectors.
inline std::optional<std::pair<BellIndex, BellIndex>> bgxor_action(int d, const BellIndex& c, const BellIndex& t,
                                                                    double tol = 1e-10) {
  const Register reg{d, 4};
  Vector v = kron(bell_state(d, c), bell_state(d, t));
  v = permute(v, gxor_permutation(reg, 0, 2));
  v = permute(v, gxor_permutation(reg, 1, 3));
  for (int k1 = 0; k1 < d; ++k1)
    for (int j1 = 0; j1 < d; ++j1)
      for (int k2 = 0; k2 < d; ++k2)
        for (int j2 = 0; j2 < d; ++j2) {
          const Vector cand = kron(bell_state(d, {k1, j1}), bell_state(d, {k2, j2}));
          if (std::abs(std::abs(cand.dot(v)) - 1.0) < tol) return std::make_pair(BellIndex{k1, j1}, BellIndex{k2, j2});
        }
  return std::nullopt;
}

/// Literal QFT_A (x) QFT_B^* on |psi_idx>.
inline std::optional<BellIndex> bqft_action(int d, const BellIndex& idx) {
  const Register reg{d, 2};
  const Matrix F = qft(d);
  Vector v = apply_local(bell_state(d, idx), reg, 0, F);
  v = apply_local(v, reg, 1, F.conjugate());
  return identify_bell(v, d);
}

/// Lambda_{ab} applied to party B of |psi_idx>.
inline std::optional<BellIndex> pauli_action(int d, int a, int b, const BellIndex& idx) {
  const Register reg{d, 2};
  return identify_bell(apply_local(bell_state(d, idx), reg, 1, pauli(d, a, b)), d);
}

// ---- diagonalizing depolarization ---------------------------------------------

/// (1/d^2) sum_{mu,nu} g rho g^dagger with g = Lambda_{mu,nu} (x) Lambda_{mu,nu}^*.
inline Matrix depolarization_average(const Matrix& rho, int d) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu) {
      const Matrix L = pauli(d, mu, nu);
      const Matrix g = kron(L, Matrix(L.conjugate()));
      out += g * rho * g.adjoint();
    }
  return out / (double(d) * d);
}

struct DepolarizationReport {
  double max_offdiag_after;   // largest Bell-basis off-diagonal magnitude after averaging
  double max_diag_change;     // largest change of a Bell-basis diagonal entry
  double max_offdiag_before;  // shows the inputs really were non-diagonal
};

/// Random full-rank two-qudit states, averaged over the g_{mu,nu} group.
inline DepolarizationReport verify_depolarization_identity(int d, int trials, uint64_t seed) {
  if (d < 2 || d > 3) throw SizeLimitError("depolarization check supports d in {2,3}");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const Index D = Index(d) * d;
  const Matrix V = bell_basis(d);
  DepolarizationReport rep{0.0, 0.0, 0.0};
  for (int t = 0; t < trials; ++t) {
    Matrix G(D, D);
    for (Index i = 0; i < D; ++i)
      for (Index j = 0; j < D; ++j) G(i, j) = cplx(gauss(rng), gauss(rng));
    Matrix rho = G * G.adjoint();
    rho /= rho.trace();
    const Matrix before = V.adjoint() * rho * V;
    const Matrix after = V.adjoint() * depolarization_average(rho, d) * V;
    for (Index i = 0; i < D; ++i)
      for (Index j = 0; j < D; ++j) {
        if (i == j) {
          rep.max_diag_change = std::max(rep.max_diag_change, std::abs(after(i, i) - before(i, i)));
        } else {
          rep.max_offdiag_after = std::max(rep.max_offdiag_after, std::abs(after(i, j)));
          rep.max_offdiag_before = std::max(rep.max_offdiag_before, std::abs(before(i, j)));
        }
      }
  }
  return rep;
}

// ---- multipartite GXOR ------------------------------------------------------

enum class MgxorMode {
  Plain,           // physical GXOR on every party, no relabeling
  PreConjugated,   // amplitude relabeling on the target, then GXOR
  TwoSided,        // relabeling before and after GXOR
};

/// GHZ-basis relabeling |psi_{k,i,j,...}> -> |psi_{k,-i,-j,...}> on one N-party copy.
/// For odd d this is not a product of single-particle unitaries.
inline Matrix amplitude_negation(int d, int N) {
  const Index D = ipow(d, N);
  Matrix W = Matrix::Zero(D, D);
  const Index labels = ipow(d, N);
  for (Index f = 0; f < labels; ++f) {
    GhzIndex in{0, std::vector<int>(N - 1)};
    Index rest = f;
    for (int s = N - 2; s >= 0; --s) {
      in.amplitudes[s] = int(rest % d);
      rest /= d;
    }
    in.phase = int(rest);
    GhzIndex out = in;
    for (int& a : out.amplitudes) a = mod_neg(a, d);
    W += ghz_state(d, out) * ghz_state(d, in).adjoint();
  }
  return W;
}

/// Label map predicted for each mode (control, target).
inline std::pair<GhzIndex, GhzIndex> mgxor_expected(int d, const GhzIndex& c, const GhzIndex& t, MgxorMode mode) {
  GhzIndex oc = c, ot = t;
  oc.phase = mod_add(c.phase, t.phase, d);
  ot.phase = mod_neg(t.phase, d);
  for (size_t i = 0; i < c.amplitudes.size(); ++i) {
    switch (mode) {
      case MgxorMode::Plain: ot.amplitudes[i] = mod_sub(c.amplitudes[i], t.amplitudes[i], d); break;
      case MgxorMode::PreConjugated: ot.amplitudes[i] = mod_add(c.amplitudes[i], t.amplitudes[i], d); break;
      case MgxorMode::TwoSided: ot.amplitudes[i] = mod_neg(mod_add(c.amplitudes[i], t.amplitudes[i], d), d); break;
    }
  }
  return {oc, ot};
}

struct MgxorReport {
  int checked = 0;
  int mismatches = 0;
  bool pass() const { return checked > 0 && mismatches == 0; }
};

/// Trilateral GXOR circuit (with the relabeling required by `mode`) applied to
/// |psi_c>|psi_t>; qudit order (A, B, C) of the control copy, then of the target.
inline Vector mgxor_apply(int d, const GhzIndex& c, const GhzIndex& t, MgxorMode mode) {
  if (d < 2 || d > 3) throw SizeLimitError("mGXOR check supports d in {2,3}");
  if (c.parties() != 3 || t.parties() != 3) throw InvalidInput("mGXOR check is implemented for N = 3");
  constexpr int N = 3;
  const Register reg{d, 2 * N};
  const Index D1 = ipow(d, N);
  const Matrix W = amplitude_negation(d, N);
  auto on_target = [&](const Vector& v) {
    Vector out(v.size());
    for (Index i = 0; i < D1; ++i) out.segment(i * D1, D1) = W * v.segment(i * D1, D1);
    return out;
  };
  Vector v = kron(ghz_state(d, c), ghz_state(d, t));
  if (mode != MgxorMode::Plain) v = on_target(v);
  for (int party = 0; party < N; ++party) v = permute(v, gxor_permutation(reg, party, N + party));
  if (mode == MgxorMode::TwoSided) v = on_target(v);
  return v;
}

/// Labels of the GHZ product state that `v` equals up to phase, if any.
inline std::optional<std::pair<GhzIndex, GhzIndex>> identify_ghz_pair(const Vector& v, int d, int N,
                                                                       double tol = 1e-10) {
  const Index D1 = ipow(d, N);
  auto label = [&](Index f) {
    GhzIndex g{0, std::vector<int>(N - 1)};
    for (int s = N - 2; s >= 0; --s) {
      g.amplitudes[s] = int(f % d);
      f /= d;
    }
    g.phase = int(f);
    return g;
  };
  for (Index fc = 0; fc < D1; ++fc)
    for (Index ft = 0; ft < D1; ++ft) {
      const GhzIndex c = label(fc), t = label(ft);
      if (std::abs(std::abs(kron(ghz_state(d, c), ghz_state(d, t)).dot(v)) - 1.0) < tol) return std::make_pair(c, t);
    }
  return std::nullopt;
}

/// Runs the circuit on every pair of three-party GHZ basis states and compares the
/// resulting projector against `expected(control, target)`.
template <class Expected>
MgxorReport mgxor_check(int d, MgxorMode mode, Expected&& expected) {
  const Index D1 = ipow(d, 3);
  auto label = [&](Index f) { return GhzIndex{int(f / (d * d)), {int((f / d) % d), int(f % d)}}; };
  MgxorReport rep;
  for (Index fc = 0; fc < D1; ++fc)
    for (Index ft = 0; ft < D1; ++ft) {
      const GhzIndex c = label(fc), t = label(ft);
      const Vector v = mgxor_apply(d, c, t, mode);
      const auto [ec, et] = expected(c, t);
      const Vector want = kron(ghz_state(d, ec), ghz_state(d, et));
      ++rep.checked;
      if (std::abs(std::abs(want.dot(v)) - 1.0) > 1e-10) ++rep.mismatches;
    }
  return rep;
}

inline MgxorReport mgxor_check(int d, MgxorMode mode) {
  return mgxor_check(d, mode, [&](const GhzIndex& c, const GhzIndex& t) { return mgxor_expected(d, c, t, mode); });
}

/// Confirms |psi_{m,l,p}>|psi_{k,i,j}> -> |psi_{m+k,l,p}>|psi_{-k,l+i,p+j}>.
inline bool verify_mgxor_index_map(int d) { return mgxor_check(d, MgxorMode::PreConjugated).pass(); }

}  // namespace qpurify::oracle
