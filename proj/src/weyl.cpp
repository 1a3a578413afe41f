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

#include "seqmeas/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace seqmeas {

void PhasePoint::validate() const {
  if (std::abs(std::abs(u) - 1.0) > 1e-12) throw InvariantError("PhasePoint: |u| must be 1");
}

PhasePoint compose(const Group& g, const PhasePoint& p, const PhasePoint& q) {
  return {g.add(p.x, q.x), g.dual_mul(p.chi, q.chi), std::conj(g.pairing(p.chi, q.x)) * p.u * q.u};
}

WeylSystem::WeylSystem(Group group) : group_(std::move(group)) {
  if (group_.is_trivial()) throw GroupError("WeylSystem: the trivial group has no phase space");
  const std::size_t n = group_.order();
  fourier_ = fourier_matrix(group_);
  u_.reserve(n);
  v_.reserve(n);
  b_points_.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    CMatrix u(n, n);
    for (std::size_t y = 0; y < n; ++y) u(group_.add_index(y, x), y) = 1.0;
    u_.push_back(std::move(u));
  }
  for (std::size_t chi = 0; chi < n; ++chi) {
    CMatrix v(n, n);
    for (std::size_t y = 0; y < n; ++y) v(y, y) = group_.pairing_index(chi, y);
    v_.push_back(std::move(v));
  }
  for (std::size_t chi = 0; chi < n; ++chi) {
    // Row chi of F, conjugated, is the plane wave c * chi(x).
    std::vector<Complex> wave(n);
    for (std::size_t x = 0; x < n; ++x) wave[x] = std::conj(fourier_(chi, x));
    b_points_.push_back(CMatrix::outer(wave, wave));
  }
}

CMatrix WeylSystem::weyl_op(const PhasePoint& p) const {
  p.validate();
  return std::conj(p.u) * (translation(p.x) * modulation(p.chi));
}

CMatrix WeylSystem::weyl_op(std::size_t x, std::size_t chi) const { return u_[x] * v_[chi]; }

CMatrix WeylSystem::position_point(std::size_t x) const { return CMatrix::unit(dim(), x, x); }

CMatrix WeylSystem::sharp_position(std::span<const GroupElement> subset) const {
  CMatrix a(dim(), dim());
  for (const auto& x : subset) {
    const auto i = group_.index(x);
    a(i, i) = 1.0;
  }
  return a;
}

CMatrix WeylSystem::sharp_momentum(std::span<const DualElement> subset) const {
  std::vector<Complex> indicator(dim(), 0.0);
  for (const auto& chi : subset) indicator[group_.index(chi)] = 1.0;
  return fourier_.adjoint() * CMatrix::diagonal(indicator) * fourier_;
}

double weyl_relation_residual(const WeylSystem& ws) {
  const auto& g = ws.group();
  double worst = 0.0;
  for (std::size_t x = 0; x < ws.dim(); ++x)
    for (std::size_t chi = 0; chi < ws.dim(); ++chi) {
      const CMatrix d = ws.translation(x) * ws.modulation(chi) -
                        std::conj(g.pairing_index(chi, x)) * (ws.modulation(chi) * ws.translation(x));
      for (const auto& z : d.data()) worst = std::max(worst, std::abs(z));
    }
  return worst;
}

double snag_residual(const WeylSystem& ws) {
  const auto& g = ws.group();
  const std::size_t n = ws.dim();
  double worst = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    CMatrix u(n, n);
    for (std::size_t chi = 0; chi < n; ++chi) u += ws.momentum_point(chi) * std::conj(g.pairing_index(chi, x));
    worst = std::max(worst, frobenius_distance(u, ws.translation(x)));
  }
  for (std::size_t chi = 0; chi < n; ++chi) {
    CMatrix v(n, n);
    for (std::size_t x = 0; x < n; ++x) v += ws.position_point(x) * g.pairing_index(chi, x);
    worst = std::max(worst, frobenius_distance(v, ws.modulation(chi)));
  }
  return worst;
}

double composition_residual(const WeylSystem& ws) {
  const auto& g = ws.group();
  const std::size_t n = ws.dim();
  double worst = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t chi = 0; chi < n; ++chi) {
      const PhasePoint p{g.element(x), g.dual_element(chi)};
      const CMatrix wp = ws.weyl_op(p);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t gamma = 0; gamma < n; ++gamma) {
          const PhasePoint q{g.element(y), g.dual_element(gamma)};
          worst = std::max(worst, frobenius_distance(wp * ws.weyl_op(q), ws.weyl_op(compose(g, p, q))));
        }
    }
  return worst;
}

}  // namespace seqmeas
