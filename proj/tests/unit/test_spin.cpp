// Copyright 2026 The seqmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "matchers.hpp"
#include "seqmeas/sequential.hpp"
#include "seqmeas/spin.hpp"

namespace seqmeas {
namespace {

using testing::Gen;
using testing::MatrixNear;

const Complex I{0.0, 1.0};

Vec3 unit_vec(Gen& gen) {
  Vec3 v{gen.real(), gen.real(), gen.real()};
  const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (auto& c : v) c /= len;
  return v;
}

// Random orthonormal pair.
std::pair<Vec3, Vec3> random_pair(Gen& gen) {
  const Vec3 a = unit_vec(gen);
  Vec3 w = unit_vec(gen);
  const Vec3 b{a[1] * w[2] - a[2] * w[1], a[2] * w[0] - a[0] * w[2], a[0] * w[1] - a[1] * w[0]};
  const double len = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
  return {a, {b[0] / len, b[1] / len, b[2] / len}};
}

// sigma . n spelled out from the Pauli matrices.
CMatrix pauli_dot(const Vec3& n) {
  const CMatrix sx{{0, 1}, {1, 0}}, sy{{0, -I}, {I, 0}}, sz{{1, 0}, {0, -1}};
  return sx * Complex(n[0]) + sy * Complex(n[1]) + sz * Complex(n[2]);
}

TEST(Spin, SigmaDotAndBloch) {
  Gen gen(1);
  const Vec3 n = unit_vec(gen);
  EXPECT_TRUE(MatrixNear(sigma_dot(n), pauli_dot(n), 1e-15));
  const Vec3 r{0.3, -0.2, 0.5};
  const Vec3 back = bloch_vector(bloch_state(r));
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(back[k], r[k], 1e-15);
  EXPECT_THROW(bloch_state({1.0, 1.0, 0.0}), InvariantError);
}

TEST(SpinFrame, RejectsDegenerateAxes) {
  EXPECT_THROW(SpinFrame({0, 0, 1}, {0, 1, 1}), FrameError);
  EXPECT_THROW(SpinFrame({0, 0, 0}, {1, 0, 0}), FrameError);
  EXPECT_NO_THROW(SpinFrame({0, 0, 2}, {3, 0, 0}));
}

TEST(SpinFrame, EigenbasisAndPhaseConvention) {
  Gen gen(2);
  for (int rep = 0; rep < 20; ++rep) {
    const auto [a, b] = random_pair(gen);
    const SpinFrame f(a, b);
    const CMatrix& e = f.basis();
    EXPECT_TRUE(MatrixNear(e.adjoint() * e, CMatrix::identity(2), 1e-14));
    // sigma.a is diag(1, -1) and sigma.b is the flip in the frame.
    EXPECT_TRUE(MatrixNear(f.to_frame(pauli_dot(a)), CMatrix{{1, 0}, {0, -1}}, 1e-14));
    EXPECT_TRUE(MatrixNear(f.to_frame(pauli_dot(b)), CMatrix{{0, 1}, {1, 0}}, 1e-14));
    const std::size_t big = std::abs(e(0, 0)) >= std::abs(e(1, 0)) ? 0 : 1;
    EXPECT_EQ(e(big, 0).imag(), 0.0);
    EXPECT_GT(e(big, 0).real(), 0.0);
  }
}

TEST(SpinFrame, StandardAxesGiveComputationalBasis) {
  const SpinFrame f({0, 0, 1}, {1, 0, 0});
  EXPECT_TRUE(MatrixNear(f.basis(), CMatrix::identity(2), 1e-15));
}

TEST(SpinPovm, Examples) {
  const SpinFrame f({0, 0, 1}, {1, 0, 0});
  const Povm pa = spin_povm(f, SpinAxis::a);
  EXPECT_TRUE(MatrixNear(pa.effect(0), CMatrix{{1, 0}, {0, 0}}, 1e-15));
  EXPECT_TRUE(MatrixNear(pa.effect(1), CMatrix{{0, 0}, {0, 1}}, 1e-15));
  EXPECT_EQ(pa.outcomes()[1], (Outcome{-1}));
  const Povm pb = spin_povm(f, SpinAxis::b);
  EXPECT_TRUE(MatrixNear(pb.effect(0), CMatrix{{0.5, 0.5}, {0.5, 0.5}}, 1e-15));
  EXPECT_TRUE(MatrixNear(pb.effect(1), CMatrix{{0.5, -0.5}, {-0.5, 0.5}}, 1e-15));
}

TEST(SpinPovm, EffectsAreProjections) {
  Gen gen(3);
  const auto [a, b] = random_pair(gen);
  const SpinFrame f(a, b);
  for (auto axis : {SpinAxis::a, SpinAxis::b}) {
    const Povm p = spin_povm(f, axis);
    for (const auto& e : p.effects()) EXPECT_TRUE(MatrixNear(e * e, e, 1e-12));
  }
}

TEST(SpinPovm, CovarianceUnderFrameWeylPair) {
  Gen gen(4);
  const auto [a, b] = random_pair(gen);
  const SpinFrame f(a, b);
  const CMatrix u = sigma_dot(f.b()), v = sigma_dot(f.a());
  const Povm sa = spin_povm(f, SpinAxis::a), sb = spin_povm(f, SpinAxis::b);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_TRUE(MatrixNear(u * sa.effect(j) * u.adjoint(), sa.effect(1 - j), 1e-14));
    EXPECT_TRUE(MatrixNear(v * sa.effect(j) * v.adjoint(), sa.effect(j), 1e-14));
    EXPECT_TRUE(MatrixNear(v * sb.effect(j) * v.adjoint(), sb.effect(1 - j), 1e-14));
    EXPECT_TRUE(MatrixNear(u * sb.effect(j) * u.adjoint(), sb.effect(j), 1e-14));
  }
}

TEST(UnsharpSpin, Examples) {
  Gen gen(5);
  const auto [a, b] = random_pair(gen);
  const SpinFrame f(a, b);
  const CMatrix& e = f.basis();
  const State plus(e * CMatrix::unit(2, 0, 0) * e.adjoint());
  const auto u = unsharp_spin(f, plus);
  EXPECT_NEAR(u.s, 1.0, 1e-12);
  EXPECT_NEAR(u.t, 0.0, 1e-12);

  const auto flat = unsharp_spin(f, State::maximally_mixed(2));
  EXPECT_NEAR(flat.s, 0.0, 1e-15);
  EXPECT_NEAR(flat.t, 0.0, 1e-15);
  EXPECT_TRUE(MatrixNear(flat.position.effect(0), CMatrix::identity(2) * Complex(0.5), 1e-15));

  const double h = 1.0 / std::sqrt(2.0);
  const State diag = bloch_state({h * (a[0] + b[0]), h * (a[1] + b[1]), h * (a[2] + b[2])});
  const auto d = unsharp_spin(f, diag);
  EXPECT_NEAR(d.s, h, 1e-12);
  EXPECT_NEAR(d.t, h, 1e-12);
  EXPECT_NEAR(tradeoff_check(f, diag), 1.0, 1e-12);
}

TEST(UnsharpSpin, SAndTAreBlochProjections) {
  Gen gen(6);
  for (int rep = 0; rep < 50; ++rep) {
    const auto [a, b] = random_pair(gen);
    const SpinFrame f(a, b);
    const State omega = gen.state(2);
    const Vec3 r = bloch_vector(omega);
    const auto u = unsharp_spin(f, omega);
    EXPECT_NEAR(u.s, r[0] * a[0] + r[1] * a[1] + r[2] * a[2], 1e-12);
    EXPECT_NEAR(u.t, r[0] * b[0] + r[1] * b[1] + r[2] * b[2], 1e-12);
    EXPECT_LE(tradeoff_check(f, omega), 1.0 + 1e-12);
    EXPECT_TRUE(MatrixNear(u.position.effect(0), (CMatrix::identity(2) + pauli_dot(a) * Complex(u.s)) * Complex(0.5), 1e-12));
  }
}

TEST(UnsharpSpin, AgreesWithNoiseMeasures) {
  Gen gen(7);
  const WeylSystem ws(Group({2}));
  for (int rep = 0; rep < 20; ++rep) {
    const auto [a, b] = random_pair(gen);
    const SpinFrame f(a, b);
    const State omega = gen.state(2);
    const auto u = unsharp_spin(f, omega);
    const auto [sigma, tau] = noise_measures(ws, CovariantMeasure::point(ws.group(), 0, State(f.to_frame(omega.matrix()))));
    EXPECT_NEAR(2 * sigma[0] - 1, u.s, 1e-10);
    EXPECT_NEAR(2 * tau[0] - 1, u.t, 1e-10);
  }
}

TEST(Kronecker, FactorizationHolds) {
  Gen gen(8);
  for (int rep = 0; rep < 30; ++rep) {
    const auto [a, b] = random_pair(gen);
    const SpinFrame f(a, b);
    EXPECT_LE(kronecker_factorization_check(f, gen.state(2), gen.state(2)), 1e-10);
  }
  const SpinFrame f({0, 0, 1}, {1, 0, 0});
  EXPECT_LE(kronecker_factorization_check(f, State::maximally_mixed(2), gen.state(2)), 1e-10);
  EXPECT_LE(kronecker_factorization_check(f, State::basis(2, 0), gen.state(2)), 1e-10);
}

TEST(Kronecker, ComputationalCouplingBreaksOffAxis) {
  Gen gen(9);
  const SpinFrame f({1, 0, 0}, {0, 1, 0});
  const State omega = gen.state(2), rho = gen.state(2);
  EXPECT_GT(kronecker_factorization_check(f, omega, rho, CouplingBasis::computational), 1e-3);
  // With a along z both couplings are the same.
  const SpinFrame z({0, 0, 1}, {1, 0, 0});
  EXPECT_LE(kronecker_factorization_check(z, omega, rho, CouplingBasis::computational), 1e-10);
}

TEST(FrameWeyl, MatchesZ2Representation) {
  Gen gen(10);
  for (int rep = 0; rep < 20; ++rep) {
    const auto [a, b] = random_pair(gen);
    EXPECT_LE(frame_weyl_residual(SpinFrame(a, b)), 1e-10);
  }
}

}  // namespace
}  // namespace seqmeas
