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

#include <cstdint>
#include <random>

#include "seqmeas/instruments.hpp"
#include "seqmeas/spin.hpp"

namespace seqmeas {

/// Seeded source for every random construction in the library: a 64-bit
/// Mersenne twister driving standard normal and uniform draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 42) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Matrix of independent standard complex Gaussian entries.
CMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

/// Vector of independent standard complex Gaussian entries.
std::vector<Complex> random_vector(Rng& rng, std::size_t n);

/// G G* / tr(G G*) for a Ginibre matrix G with `rank` columns
/// (full rank when rank == 0).
State random_state(Rng& rng, std::size_t n, std::size_t rank = 0);

/// Haar-distributed unitary (Gram-Schmidt on a Ginibre matrix).
CMatrix random_unitary(Rng& rng, std::size_t n);

/// Random positive densities on G, normalized to total trace 1.
CovariantMeasure random_measure(Rng& rng, const Group& g);

/// Uniform point of the unit ball in R^3.
Vec3 random_bloch_vector(Rng& rng);

/// Uniform point of the unit sphere in R^3.
Vec3 random_unit_vector(Rng& rng);

}  // namespace seqmeas
