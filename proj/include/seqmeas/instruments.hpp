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

#include <functional>
#include <vector>

#include "seqmeas/observables.hpp"

namespace seqmeas {

/// Completely positive, trace non-increasing map stored as its Choi matrix
///   choi = sum_ij Phi(|i><j|) (x) |i><j|,
/// so choi[(a, i), (b, j)] = Phi(|i><j|)[a, b] with index a * dim_in + i.
class CpMap {
 public:
  CpMap(std::size_t dim_in, std::size_t dim_out, CMatrix choi, const Tolerance& tol = {});

  static CpMap identity(std::size_t n);
  // rho -> sum_k K_k rho K_k*
  static CpMap from_kraus(std::span<const CMatrix> kraus);
  // Choi matrix of an arbitrary linear action, evaluated on matrix units.
  static CpMap from_action(std::size_t dim_in, std::size_t dim_out,
                           const std::function<CMatrix(const CMatrix&)>& action,
                           const Tolerance& tol = {});

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const CMatrix& choi() const { return choi_; }

 private:
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  CMatrix choi_;
};

/// Schrodinger picture Phi(t); linear in t.
CMatrix apply(const CpMap& phi, const CMatrix& t);

/// Heisenberg picture: tr[rho Phi*(a)] = tr[Phi(rho) a].
CMatrix dual_apply(const CpMap& phi, const CMatrix& a);

/// Kraus operators from the eigendecomposition of the Choi matrix.
std::vector<CMatrix> kraus_operators(const CpMap& phi, double cutoff = 1e-12);

/// Outcome-indexed family of CP maps whose sum is trace preserving.
/// Outcomes are the points of `outcomes` in enumeration order.
class Instrument {
 public:
  Instrument(Group outcomes, std::vector<CpMap> maps, const Tolerance& tol = {});

  /// Single outcome, identity map.
  static Instrument trivial(std::size_t n);

  const Group& outcomes() const { return outcomes_; }
  const std::vector<CpMap>& maps() const { return maps_; }
  const CpMap& map(std::size_t k) const { return maps_[k]; }
  std::size_t size() const { return maps_.size(); }
  std::size_t dim() const { return maps_.front().dim_in(); }

 private:
  Group outcomes_;
  std::vector<CpMap> maps_;
};

/// Positive operator densities {M(x)}_{x in G} with sum_x tr M(x) = 1.
///
/// The general vector measure dM = M dmu collapses, for finite G, to its
/// density against counting measure; that density is what is stored.
class CovariantMeasure {
 public:
  CovariantMeasure(Group group, std::vector<CMatrix> m, const Tolerance& tol = {});

  /// The measure delta_at (x) omega.
  static CovariantMeasure point(const Group& g, std::size_t at, const State& omega);

  const Group& group() const { return group_; }
  const std::vector<CMatrix>& densities() const { return m_; }
  const CMatrix& density(std::size_t x) const { return m_[x]; }
  std::size_t dim() const { return m_.front().rows(); }

  /// M'(x) = U_x* M(x) U_x
  std::vector<CMatrix> shifted(const WeylSystem& ws) const;
  /// M'(G) = sum_x M'(x)
  CMatrix total_shifted(const WeylSystem& ws) const;
  /// nu(x) = ||M'(x)||_1
  std::vector<double> weights(const WeylSystem& ws) const;
  /// omega(x) = M'(x) / ||M'(x)||_1, zero where nu(x) = 0.
  std::vector<CMatrix> probe_states(const WeylSystem& ws) const;

 private:
  Group group_;
  std::vector<CMatrix> m_;
};

/// Unitary coupling on L^2(G) (x) L^2(G): e_a (x) e_b -> e_a (x) e_{a+b}.
CMatrix coupling_unitary(const WeylSystem& ws);

/// Largest Frobenius deviation in L (U_x (x) U_y) = (U_x (x) U_{x+y}) L and
/// L (V_chi (x) V_gamma) = (V_{chi gamma^-1} (x) V_gamma) L.
double coupling_intertwiner_residual(const WeylSystem& ws);

/// Instrument of the measurement model with probe state omega, coupling L
/// and sharp position pointer:
///   I_x(rho) = tr_2[(1 (x) A({x})) L (rho (x) omega) L*].
Instrument standard_instrument(const WeylSystem& ws, const State& omega);

/// The W-covariant instrument of a measure:
///   I_x(rho) = sum_h nu(h) U_h* I^{omega(h)}_x(rho) U_h.
Instrument covariant_instrument(const WeylSystem& ws, const CovariantMeasure& mm);

/// Effects x -> I_x*(1).
Povm associated_observable(const Instrument& i);

/// J_(x,y) = second_y o first_x, outcomes on the product of both outcome sets.
Instrument compose_sequential(const Instrument& first, const Instrument& second);

/// Largest violation of I_{x+k}(rho) = W I_k(W* rho W) W*, W = U_x V_chi,
/// over all (x, chi), outcomes k and matrix units rho.
double verify_covariance(const WeylSystem& ws, const Instrument& i);

/// Inverse of covariant_instrument. Throws NotCovariant when the covariance
/// residual of `i` exceeds 1e-6.
CovariantMeasure reconstruct_measure(const WeylSystem& ws, const Instrument& i);

/// max_k ||choi_k(a) - choi_k(b)||_F
double instrument_distance(const Instrument& a, const Instrument& b);

}  // namespace seqmeas
