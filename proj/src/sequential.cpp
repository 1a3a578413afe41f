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

#include "seqmeas/sequential.hpp"

#include <algorithm>
#include <string>

namespace seqmeas {

Povm joint_observable(const WeylSystem& ws, const Instrument& i) {
  const double residual = verify_covariance(ws, i);
  if (residual > 1e-6) {
    throw NotCovariant("joint_observable: covariance residual " + std::to_string(residual) +
                       " exceeds 1e-6");
  }
  const std::size_t n = ws.dim();
  std::vector<CMatrix> effects(n * n);
#pragma omp parallel for schedule(static)
  for (long t = 0; t < static_cast<long>(n * n); ++t) {
    const auto x = static_cast<std::size_t>(t) / n, chi = static_cast<std::size_t>(t) % n;
    effects[static_cast<std::size_t>(t)] = dual_apply(i.map(x), ws.momentum_point(chi));
  }
  return {product_labels(ws.group(), ws.group()), std::move(effects)};
}

std::pair<ProbVector, ProbVector> noise_measures(const WeylSystem& ws, const CovariantMeasure& mm) {
  const auto& g = ws.group();
  const CMatrix total = mm.total_shifted(ws);
  const std::size_t n = ws.dim();
  std::vector<double> sigma(n), tau(n);
  for (std::size_t x = 0; x < n; ++x) sigma[x] = total(x, x).real();
  for (std::size_t chi = 0; chi < n; ++chi) {
    const CMatrix& b = ws.momentum_point(g.neg_index(chi));
    Complex s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += b(i, j) * total(j, i);
    tau[chi] = s.real();
  }
  return {ProbVector(outcome_labels(g), std::move(sigma)), ProbVector(outcome_labels(g), std::move(tau))};
}

CMatrix check_map(const WeylSystem& ws, const CMatrix& t) {
  const std::size_t n = ws.dim();
  if (t.rows() != n || t.cols() != n) throw DimensionError("check_map: operator is not on L^2(G)");
  const auto& g = ws.group();
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = t(g.neg_index(j), g.neg_index(i));
  return out;
}

State generating_state(const WeylSystem& ws, const CovariantMeasure& mm) {
  return State(check_map(ws, mm.total_shifted(ws)));
}

SequentialImplementation sequential_from_cpso(const WeylSystem& ws, const State& s) {
  Instrument instrument = standard_instrument(ws, State(check_map(ws, s.matrix())));
  Povm joint = joint_observable(ws, instrument);
  return {std::move(instrument), std::move(joint)};
}

double SequentialResiduals::max() const {
  return std::max({covariance, marginals, position_smearing, momentum_smearing, generating_state});
}

SequentialResult run_sequential(const WeylSystem& ws, const CovariantMeasure& mm) {
  const Instrument instrument = covariant_instrument(ws, mm);
  SequentialResiduals r;
  r.covariance = verify_covariance(ws, instrument);

  Povm joint = joint_observable(ws, instrument);
  Povm marginal_a = marginal_position(ws, joint);
  Povm marginal_b = marginal_momentum(ws, joint);
  auto [sigma, tau] = noise_measures(ws, mm);
  State s = generating_state(ws, mm);

  r.marginals = max_effect_distance(marginal_a, associated_observable(instrument));
  r.position_smearing = max_effect_distance(marginal_a, smear_position(ws, sigma));
  r.momentum_smearing = max_effect_distance(marginal_b, smear_momentum(ws, tau));
  r.generating_state = max_effect_distance(joint, cpso_from_state(ws, s));

  return {mm,
          std::move(joint),
          std::move(marginal_a),
          std::move(marginal_b),
          std::move(sigma),
          std::move(tau),
          std::move(s),
          r};
}

}  // namespace seqmeas
