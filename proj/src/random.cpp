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

#include "seqmeas/random.hpp"

#include <cmath>

namespace seqmeas {

CMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  CMatrix m(rows, cols);
  for (auto& z : m.data()) z = rng.complex_normal();
  return m;
}

std::vector<Complex> random_vector(Rng& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

State random_state(Rng& rng, std::size_t n, std::size_t rank) {
  const CMatrix g = random_matrix(rng, n, rank == 0 ? n : rank);
  CMatrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()) * Complex(0.5);
  rho *= 1.0 / rho.trace().real();
  return State(std::move(rho));
}

CMatrix random_unitary(Rng& rng, std::size_t n) {
  CMatrix q = random_matrix(rng, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex overlap = 0.0;
      for (std::size_t i = 0; i < n; ++i) overlap += std::conj(q(i, k)) * q(i, j);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= overlap * q(i, k);
    }
    double len = 0.0;
    for (std::size_t i = 0; i < n; ++i) len += std::norm(q(i, j));
    len = std::sqrt(len);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= len;
  }
  return q;
}

CovariantMeasure random_measure(Rng& rng, const Group& g) {
  const std::size_t n = g.order();
  std::vector<CMatrix> m;
  m.reserve(n);
  double total = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    // Uneven weights so that no point dominates by construction.
    const CMatrix a = random_matrix(rng, n, n) * Complex(rng.uniform());
    CMatrix mx = a * a.adjoint();
    mx = (mx + mx.adjoint()) * Complex(0.5);
    total += mx.trace().real();
    m.push_back(std::move(mx));
  }
  for (auto& mx : m) mx *= 1.0 / total;
  return {g, std::move(m)};
}

Vec3 random_unit_vector(Rng& rng) {
  for (;;) {
    const Vec3 v{rng.normal(), rng.normal(), rng.normal()};
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (len > 1e-8) return {v[0] / len, v[1] / len, v[2] / len};
  }
}

Vec3 random_bloch_vector(Rng& rng) {
  const Vec3 dir = random_unit_vector(rng);
  const double r = std::cbrt(rng.uniform());
  return {r * dir[0], r * dir[1], r * dir[2]};
}

}  // namespace seqmeas
