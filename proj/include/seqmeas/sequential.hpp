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

#include <utility>

#include "seqmeas/instruments.hpp"

namespace seqmeas {

/// C(x, chi) = I_x*(B({chi})): measure with the instrument, then measure
/// sharp momentum on the output. Outcomes are labelled x ++ chi.
/// Throws NotCovariant when the covariance residual of `i` exceeds 1e-6.
Povm joint_observable(const WeylSystem& ws, const Instrument& i);

/// sigma(x) = <e_x| M'(G) |e_x>,  tau(chi) = tr[B({chi^-1}) M'(G)].
std::pair<ProbVector, ProbVector> noise_measures(const WeylSystem& ws, const CovariantMeasure& mm);

/// Negate-and-transpose: check(T)[i, j] = T[-j, -i].
CMatrix check_map(const WeylSystem& ws, const CMatrix& t);

/// S = check(M'(G)), the state generating the joint observable.
State generating_state(const WeylSystem& ws, const CovariantMeasure& mm);

struct SequentialImplementation {
  Instrument instrument;
  Povm joint;
};

/// Standard instrument with probe check(S) together with its joint
/// observable, which is C_S.
SequentialImplementation sequential_from_cpso(const WeylSystem& ws, const State& s);

/// Largest deviations from the structure results, all Frobenius norms.
struct SequentialResiduals {
  double covariance = 0.0;          // instrument covariance
  double marginals = 0.0;           // marginal_a/b against the joint sums
  double position_smearing = 0.0;   // marginal_a vs smear_position(sigma)
  double momentum_smearing = 0.0;   // marginal_b vs smear_momentum(tau)
  double generating_state = 0.0;    // joint vs cpso_from_state(S)

  double max() const;
};

struct SequentialResult {
  CovariantMeasure measure;
  Povm joint;
  Povm marginal_a;
  Povm marginal_b;
  ProbVector sigma;
  ProbVector tau;
  State generating_state;
  SequentialResiduals residuals;
};

/// Runs the whole pipeline for one measure: build the covariant instrument,
/// form its joint observable and marginals, and check them against the
/// noise measures and the generating state.
SequentialResult run_sequential(const WeylSystem& ws, const CovariantMeasure& mm);

}  // namespace seqmeas
