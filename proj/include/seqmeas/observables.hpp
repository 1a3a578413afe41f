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

#include "seqmeas/weyl.hpp"

namespace seqmeas {

/// Outcome label. Points of G are their residues; points of G x dual(G)
/// are the concatenation x ++ chi.
using Outcome = std::vector<int>;

std::vector<Outcome> outcome_labels(const Group& g);
std::vector<Outcome> product_labels(const Group& first, const Group& second);

/// Density operator: Hermitian, positive, unit trace (tolerance 1e-9).
class State {
 public:
  explicit State(CMatrix matrix, const Tolerance& tol = {});

  static State maximally_mixed(std::size_t n);
  static State basis(std::size_t n, std::size_t k);  // |e_k><e_k|

  const CMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  CMatrix matrix_;
};

/// Probability weights over labeled outcomes. Weights in [-1e-12, 0) are
/// rounding noise and are clipped to 0.
class ProbVector {
 public:
  ProbVector(std::vector<Outcome> outcomes, std::vector<double> weights);

  static ProbVector point_mass(const Group& g, std::size_t at);
  static ProbVector uniform(const Group& g);

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const std::vector<double>& weights() const { return weights_; }
  double operator[](std::size_t k) const { return weights_[k]; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<Outcome> outcomes_;
  std::vector<double> weights_;
};

/// Finite-outcome POVM: positive effects summing to the identity.
class Povm {
 public:
  Povm(std::vector<Outcome> outcomes, std::vector<CMatrix> effects, const Tolerance& tol = {});

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const std::vector<CMatrix>& effects() const { return effects_; }
  const CMatrix& effect(std::size_t k) const { return effects_[k]; }
  std::size_t size() const { return effects_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  std::vector<Outcome> outcomes_;
  std::vector<CMatrix> effects_;
  std::size_t dim_ = 0;
};

/// Outcome distribution k -> tr(rho E_k).
ProbVector measure(const Povm& p, const State& rho);

Povm sharp_position_povm(const WeylSystem& ws);
Povm sharp_momentum_povm(const WeylSystem& ws);

/// A_sigma: effect at x' is sum_x sigma(x' - x) A({x}).
Povm smear_position(const WeylSystem& ws, const ProbVector& sigma);

/// B_tau: effect at chi' is sum_chi tau(chi' chi^-1) B({chi}).
Povm smear_momentum(const WeylSystem& ws, const ProbVector& tau);

/// Covariant phase-space observable C_S on G x dual(G):
/// effect at (x, chi) is (1/n) U_x V_chi S V_chi* U_x*.
Povm cpso_from_state(const WeylSystem& ws, const State& s);

/// Dimension of the real span of the effects inside the n^2-dimensional
/// space of Hermitian matrices, singular values below cutoff * s_max dropped.
std::size_t effect_span_rank(const Povm& p, double relative_cutoff = 1e-8);

bool is_informationally_complete(const Povm& p, double relative_cutoff = 1e-8);

/// max over (x,chi), (y,gamma) of
///   || C(x+y, chi gamma) - W C(y,gamma) W* ||_F,  W = U_x V_chi.
double verify_cpso_covariance(const WeylSystem& ws, const Povm& p);

/// Sum of the effects of a G x dual(G) POVM over the dual (resp. over G).
Povm marginal_position(const WeylSystem& ws, const Povm& joint);
Povm marginal_momentum(const WeylSystem& ws, const Povm& joint);

/// max_k ||E_k - F_k||_F for POVMs with matching outcome counts.
double max_effect_distance(const Povm& a, const Povm& b);

}  // namespace seqmeas
