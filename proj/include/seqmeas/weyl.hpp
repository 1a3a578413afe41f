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

#pragma once

#include <span>
#include <vector>

#include "seqmeas/group.hpp"

namespace seqmeas {

/// Element (x, chi, u) of the Weyl-Heisenberg group G x dual(G) x T.
struct PhasePoint {
  GroupElement x;
  DualElement chi;
  Complex u{1.0, 0.0};

  // Throws InvariantError unless |u| = 1 within 1e-12.
  void validate() const;
};

/// (x,chi,u)(y,gamma,v) = (x+y, chi gamma, conj(chi(y)) u v)
PhasePoint compose(const Group& g, const PhasePoint& p, const PhasePoint& q);

/// Schrodinger representation on L^2(G): translations U_x e_y = e_{y+x} and
/// modulations V_chi = diag(chi(y)), all cached at construction.
class WeylSystem {
 public:
  explicit WeylSystem(Group group);

  const Group& group() const { return group_; }
  std::size_t dim() const { return group_.order(); }

  const CMatrix& translation(const GroupElement& x) const { return u_[group_.index(x)]; }
  const CMatrix& modulation(const DualElement& chi) const { return v_[group_.index(chi)]; }
  const CMatrix& translation(std::size_t x) const { return u_[x]; }
  const CMatrix& modulation(std::size_t chi) const { return v_[chi]; }
  const CMatrix& fourier() const { return fourier_; }

  /// W(x,chi,u) = conj(u) U_x V_chi
  CMatrix weyl_op(const PhasePoint& p) const;
  /// U_x V_chi by index (u = 1).
  CMatrix weyl_op(std::size_t x, std::size_t chi) const;

  /// A({x}) = |e_x><e_x|
  CMatrix position_point(std::size_t x) const;
  /// B({chi}) = F^-1 |e_chi><e_chi| F, the projector onto the plane wave chi.
  const CMatrix& momentum_point(std::size_t chi) const { return b_points_[chi]; }

  CMatrix sharp_position(std::span<const GroupElement> subset) const;
  CMatrix sharp_momentum(std::span<const DualElement> subset) const;

 private:
  Group group_;
  std::vector<CMatrix> u_;
  std::vector<CMatrix> v_;
  std::vector<CMatrix> b_points_;
  CMatrix fourier_;
};

/// max over x, chi of the largest entry of U_x V_chi - conj(chi(x)) V_chi U_x.
double weyl_relation_residual(const WeylSystem& ws);

/// Largest Frobenius deviation in U_x = sum_chi conj(chi(x)) B({chi}) and
/// V_chi = sum_x chi(x) A({x}).
double snag_residual(const WeylSystem& ws);

/// Largest Frobenius deviation in W(p) W(q) = W(pq) over all p, q with u = 1.
/// The product carries the phase: W(x,chi) W(y,gamma) = chi(y) U_{x+y} V_{chi gamma}.
double composition_residual(const WeylSystem& ws);

}  // namespace seqmeas
