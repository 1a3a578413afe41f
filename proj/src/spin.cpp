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

#include "seqmeas/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "seqmeas/instruments.hpp"

namespace seqmeas {

namespace {

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 normalized(const Vec3& v, const char* name) {
  const double len = std::sqrt(dot(v, v));
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw FrameError(std::string("SpinFrame: direction ") + name + " has no length");
  }
  return {v[0] / len, v[1] / len, v[2] / len};
}

const Vec3& axis_of(const SpinFrame& f, SpinAxis axis) { return axis == SpinAxis::a ? f.a() : f.b(); }

double expectation(const State& rho, const CMatrix& e) {
  const auto& r = rho.matrix();
  Complex s = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) s += r(i, j) * e(j, i);
  return s.real();
}

const WeylSystem& z2() {
  static const WeylSystem ws(Group({2}));
  return ws;
}

}  // namespace

CMatrix sigma_dot(const Vec3& n) {
  const Complex i{0.0, 1.0};
  return CMatrix{{n[2], n[0] - i * n[1]}, {n[0] + i * n[1], -n[2]}};
}

State bloch_state(const Vec3& r) {
  if (dot(r, r) > 1.0 + 1e-12) throw InvariantError("bloch_state: |r| exceeds 1");
  CMatrix rho = CMatrix::identity(2) + sigma_dot(r);
  rho *= 0.5;
  return State(std::move(rho));
}

Vec3 bloch_vector(const State& rho) {
  if (rho.dim() != 2) throw DimensionError("bloch_vector: not a qubit state");
  const auto& m = rho.matrix();
  return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

SpinFrame::SpinFrame(const Vec3& a, const Vec3& b) : a_(normalized(a, "a")), b_(normalized(b, "b")) {
  const double overlap = dot(a_, b_);
  if (std::abs(overlap) > 1e-10) {
    throw FrameError("SpinFrame: a and b are not orthogonal (a.b = " + std::to_string(overlap) + ")");
  }
  // Remove the residual overlap so the frame is exactly orthonormal.
  b_ = normalized({b_[0] - overlap * a_[0], b_[1] - overlap * a_[1], b_[2] - overlap * a_[2]}, "b");

  CMatrix proj = CMatrix::identity(2) + sigma_dot(a_);
  proj *= 0.5;
  const std::size_t col = std::hypot(std::abs(proj(0, 0)), std::abs(proj(1, 0))) >=
                                  std::hypot(std::abs(proj(0, 1)), std::abs(proj(1, 1)))
                              ? 0
                              : 1;
  std::array<Complex, 2> plus{proj(0, col), proj(1, col)};
  const std::size_t big = std::abs(plus[0]) >= std::abs(plus[1]) ? 0 : 1;
  const Complex phase = std::abs(plus[big]) / plus[big];
  const double len = std::hypot(std::abs(plus[0]), std::abs(plus[1]));
  for (auto& c : plus) c *= phase / len;

  const CMatrix sb = sigma_dot(b_);
  const std::array<Complex, 2> minus{sb(0, 0) * plus[0] + sb(0, 1) * plus[1],
                                     sb(1, 0) * plus[0] + sb(1, 1) * plus[1]};
  basis_ = CMatrix{{plus[0], minus[0]}, {plus[1], minus[1]}};
}

CMatrix SpinFrame::to_frame(const CMatrix& t) const { return basis_.adjoint() * t * basis_; }

CMatrix SpinFrame::from_frame(const CMatrix& t) const { return basis_ * t * basis_.adjoint(); }

Povm unsharp_spin_povm(const SpinFrame& frame, SpinAxis axis, double s) {
  const Vec3& n = axis_of(frame, axis);
  const CMatrix half = CMatrix::identity(2) * Complex(0.5);
  const CMatrix tilt = sigma_dot(n) * Complex(0.5 * s);
  return {{{1}, {-1}}, {half + tilt, half - tilt}};
}

Povm spin_povm(const SpinFrame& frame, SpinAxis axis) { return unsharp_spin_povm(frame, axis, 1.0); }

UnsharpSpin unsharp_spin(const SpinFrame& frame, const State& omega) {
  if (omega.dim() != 2) throw DimensionError("unsharp_spin: probe is not a qubit state");
  const double s = 2.0 * expectation(omega, spin_povm(frame, SpinAxis::a).effect(0)) - 1.0;
  const double t = 2.0 * expectation(omega, spin_povm(frame, SpinAxis::b).effect(0)) - 1.0;
  return {s, t, unsharp_spin_povm(frame, SpinAxis::a, s), unsharp_spin_povm(frame, SpinAxis::b, t)};
}

double tradeoff_check(const SpinFrame& frame, const State& omega) {
  const auto u = unsharp_spin(frame, omega);
  return u.s * u.s + u.t * u.t;
}

double kronecker_factorization_check(const SpinFrame& frame, const State& omega, const State& rho,
                                     CouplingBasis coupling) {
  if (omega.dim() != 2 || rho.dim() != 2) {
    throw DimensionError("kronecker_factorization_check: qubit states required");
  }
  CMatrix l = coupling_unitary(z2());
  if (coupling == CouplingBasis::frame) {
    const CMatrix e = kron(frame.basis(), frame.basis());
    l = e * l * e.adjoint();
  }
  const CMatrix la = l.adjoint();
  const CMatrix joint = l * kron(rho.matrix(), omega.matrix()) * la;
  const Povm pointer = spin_povm(frame, SpinAxis::a);
  const std::array<CMatrix, 2> shift{CMatrix::identity(2), sigma_dot(frame.b())};

  const CMatrix rho_f = frame.to_frame(rho.matrix());
  double worst = 0.0;
  for (std::size_t k = 0; k < 2; ++k) {
    const CMatrix out = partial_trace_second(kron(CMatrix::identity(2), pointer.effect(k)) * joint, 2, 2);
    const CMatrix out_f = frame.to_frame(out);
    const CMatrix probe_f = frame.to_frame(shift[k] * omega.matrix() * shift[k]);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        worst = std::max(worst, std::abs(out_f(i, j) - rho_f(i, j) * probe_f(i, j)));
  }
  return worst;
}

double frame_weyl_residual(const SpinFrame& frame) {
  const auto& ws = z2();
  const CMatrix u = sigma_dot(frame.b());
  const CMatrix v = sigma_dot(frame.a());
  // F(alpha e_+ + beta e_-) = ((alpha + beta) e_+ + (alpha - beta) e_-) / sqrt 2
  const double h = 1.0 / std::numbers::sqrt2;
  const CMatrix f = frame.from_frame(CMatrix{{h, h}, {h, -h}});

  double worst = (u * v + v * u).frobenius_norm();
  worst = std::max(worst, frobenius_distance(frame.to_frame(u), ws.translation(1)));
  worst = std::max(worst, frobenius_distance(frame.to_frame(v), ws.modulation(1)));
  worst = std::max(worst, frobenius_distance(frame.to_frame(f), ws.fourier()));
  return worst;
}

}  // namespace seqmeas
