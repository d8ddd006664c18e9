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


#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qpurify/oracle.hpp"

namespace qpurify {
namespace {

using oracle::Matrix;

CoeffMatrix random_state(int d, std::mt19937_64& rng) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> a(size_t(d) * d);
  double sum = 0;
  for (double& v : a) sum += (v = ex(rng));
  for (double& v : a) v /= sum;
  return CoeffMatrix(Dimension(d), a);
}

TEST(BellBasis, Orthonormal) {
  for (int d : {2, 3, 5}) {
    const Matrix V = oracle::bell_basis(d);
    EXPECT_LT((V.adjoint() * V - Matrix::Identity(d * d, d * d)).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Paulis, ActOnComputationalBasis) {
  const int d = 5;
  const Matrix X = oracle::shift_x(d);
  const Matrix F = oracle::qft(d);
  EXPECT_LT((F.adjoint() * F - Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_EQ(X(4, 0), oracle::cplx(1.0));  // X|0> = |d-1>
  EXPECT_LT((oracle::pauli(d, 2, 3) - X * X * X * oracle::phase_z(d) * oracle::phase_z(d)).cwiseAbs().maxCoeff(),
            1e-13);
}

TEST(BuildPairs, PureQubitPairs) {
  const auto s = oracle::build_bell_pairs(CoeffMatrix::pure(Dimension(2)), 2);
  const auto phi = oracle::kron(oracle::bell_state(2, {0, 0}), oracle::bell_state(2, {0, 0}));
  const Matrix proj = phi * phi.adjoint();
  EXPECT_LT((s.rho - proj).cwiseAbs().maxCoeff(), 1e-14);
  // |psi_00> is (|00> + |11>)/sqrt 2.
  const auto v = oracle::bell_state(2, {0, 0});
  EXPECT_NEAR(v(0).real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(v(3).real(), std::sqrt(0.5), 1e-15);
}

TEST(BuildPairs, PhysicalAndSpectrum) {
  std::mt19937_64 rng(8);
  for (int d : {2, 3}) {
    const auto c = random_state(d, rng);
    for (int pairs : {1, 2, 3}) {
      const auto s = oracle::build_bell_pairs(c, pairs);
      EXPECT_TRUE(oracle::check_physical(s.rho).ok());
      EXPECT_NEAR(s.rho.trace().real(), 1.0, 1e-12);
    }
    const auto one = oracle::build_bell_pairs(c, 1);
    Eigen::SelfAdjointEigenSolver<Matrix> es(one.rho);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + d * d);
    std::vector<double> want(c.data().begin(), c.data().end());
    std::sort(ev.begin(), ev.end());
    std::sort(want.begin(), want.end());
    for (int i = 0; i < d * d; ++i) EXPECT_NEAR(ev[i], want[i], 1e-12);
  }
}

TEST(BuildPairs, SizeLimits) {
  const auto c4 = CoeffMatrix::pure(Dimension(4));
  EXPECT_THROW(oracle::build_bell_pairs(c4, 3), oracle::SizeLimitError);
  EXPECT_THROW(oracle::build_bell_pairs(CoeffMatrix::pure(Dimension(6)), 2), oracle::SizeLimitError);
  EXPECT_THROW(oracle::build_bell_pairs(c4, 4), oracle::SizeLimitError);
  EXPECT_THROW(oracle::build_bell_pairs(c4, 0), InvalidInput);
  EXPECT_NO_THROW(oracle::build_bell_pairs(c4, 2));
}

TEST(Gates, PreservePhysicality) {
  std::mt19937_64 rng(12);
  const auto s = oracle::build_bell_pairs(random_state(3, rng), 2);
  Matrix rho = oracle::permute(s.rho, oracle::gxor_permutation(s.reg, 0, 2));
  rho = oracle::apply_local(rho, s.reg, 1, oracle::qft(3));
  rho = oracle::depolarize_qudit(rho, s.reg, 3, 0.7);
  const auto r = oracle::check_physical(rho);
  EXPECT_TRUE(r.ok()) << r.trace_error << " " << r.hermiticity_error << " " << r.min_eigenvalue;
}

TEST(Gates, GxorIsPermutation) {
  const oracle::Register reg{3, 4};
  auto perm = oracle::gxor_permutation(reg, 1, 3);
  std::sort(perm.begin(), perm.end());
  for (oracle::Index i = 0; i < reg.size(); ++i) EXPECT_EQ(perm[i], i);
}

TEST(Simulate, PureUnchanged) {
  for (int d : {2, 3})
    for (auto v : {oracle::Variant::P1, oracle::Variant::P2}) {
      const auto o = oracle::simulate_recurrence_step(oracle::build_bell_pairs(CoeffMatrix::pure(Dimension(d)), 2), v);
      EXPECT_NEAR(o.kept.fidelity(), 1.0, 1e-12);
      EXPECT_NEAR(o.success_prob, 1.0, 1e-12);
    }
  const auto o = oracle::simulate_recurrence_step(oracle::build_bell_pairs(CoeffMatrix::pure(Dimension(3)), 3),
                                                  oracle::Variant::ThreeCopy);
  EXPECT_NEAR(o.success_prob, 1.0, 1e-12);
}

TEST(Simulate, ClassProbabilitiesSumToOne) {
  std::mt19937_64 rng(21);
  for (int d : {2, 3, 4, 5}) {
    const auto s = oracle::build_bell_pairs(random_state(d, rng), 2);
    const auto o = oracle::simulate_recurrence_step(s, oracle::Variant::P1);
    ASSERT_EQ(o.class_probs.size(), size_t(d));
    double sum = 0;
    for (double p : o.class_probs) sum += p;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(Simulate, RejectsWrongPairCount) {
  const auto s = oracle::build_bell_pairs(CoeffMatrix::pure(Dimension(2)), 2);
  EXPECT_THROW(oracle::simulate_recurrence_step(s, oracle::Variant::ThreeCopy), InvalidInput);
}

TEST(Diagonalization, RandomStates) {
  for (int d : {2, 3}) {
    const auto r = oracle::verify_depolarization_identity(d, 20, 5);
    EXPECT_LT(r.max_offdiag_after, 1e-10);
    EXPECT_LT(r.max_diag_change, 1e-10);
    EXPECT_GT(r.max_offdiag_before, 1e-3);
  }
  EXPECT_THROW(oracle::verify_depolarization_identity(5, 1, 1), oracle::SizeLimitError);
}

TEST(Diagonalization, DiagonalInputUnchanged) {
  std::mt19937_64 rng(6);
  for (int d : {2, 3}) {
    const Matrix rho = oracle::bell_diagonal_matrix(random_state(d, rng));
    EXPECT_LT((oracle::depolarization_average(rho, d) - rho).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Mgxor, ExhaustiveQutrits) {
  const auto r = oracle::mgxor_check(3, oracle::MgxorMode::PreConjugated);
  EXPECT_EQ(r.checked, 729);
  EXPECT_EQ(r.mismatches, 0);
  EXPECT_TRUE(oracle::verify_mgxor_index_map(3));
}

TEST(Mgxor, AmplitudeNegationIsUnitaryButNotLocalForQutrits) {
  const Matrix W = oracle::amplitude_negation(3, 3);
  EXPECT_LT((W.adjoint() * W - Matrix::Identity(27, 27)).cwiseAbs().maxCoeff(), 1e-12);
  // For qubits the relabeling is the identity on labels.
  EXPECT_LT((oracle::amplitude_negation(2, 3) - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
}

}  // namespace
}  // namespace qpurify
