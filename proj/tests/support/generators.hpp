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

// Seeded random inputs for property tests. Deliberately separate from the
// library's own random module so that tests do not share its code paths.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "seqmeas/instruments.hpp"

namespace seqmeas::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double real() { return normal_(engine_); }
  double unit() { return uniform_(engine_); }
  Complex complex() { return {real(), real()}; }

  std::vector<Complex> vector(std::size_t n) {
    std::vector<Complex> v(n);
    for (auto& z : v) z = complex();
    return v;
  }

  CMatrix matrix(std::size_t rows, std::size_t cols) {
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = complex();
    return m;
  }

  CMatrix hermitian(std::size_t n) {
    const CMatrix a = matrix(n, n);
    return (a + a.adjoint()) * Complex(0.5);
  }

  // Positive matrix of the given rank (full when 0).
  CMatrix positive(std::size_t n, std::size_t rank = 0) {
    const CMatrix a = matrix(n, rank == 0 ? n : rank);
    const CMatrix p = a * a.adjoint();
    return (p + p.adjoint()) * Complex(0.5);
  }

  State state(std::size_t n, std::size_t rank = 0) {
    CMatrix p = positive(n, rank);
    p *= 1.0 / p.trace().real();
    return State(std::move(p));
  }

  // Random densities; roughly one point in four is left empty when sparse.
  CovariantMeasure measure(const Group& g, bool sparse = false) {
    const std::size_t n = g.order();
    std::vector<CMatrix> m;
    double total = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      const bool empty = sparse && x != 0 && unit() < 0.25;
      CMatrix p = empty ? CMatrix(n, n) : positive(n, 1 + static_cast<std::size_t>(unit() * n) % n);
      total += p.trace().real();
      m.push_back(std::move(p));
    }
    for (auto& p : m) p *= 1.0 / total;
    return {g, std::move(m)};
  }

  // Trace-preserving map with `count` Kraus operators, via a random isometry.
  std::vector<CMatrix> kraus(std::size_t n, std::size_t count) {
    CMatrix stacked = matrix(n * count, n);
    // Orthonormalize the columns of the stacked Kraus matrix.
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex ov = 0.0;
        for (std::size_t i = 0; i < n * count; ++i) ov += std::conj(stacked(i, k)) * stacked(i, j);
        for (std::size_t i = 0; i < n * count; ++i) stacked(i, j) -= ov * stacked(i, k);
      }
      double len = 0.0;
      for (std::size_t i = 0; i < n * count; ++i) len += std::norm(stacked(i, j));
      len = std::sqrt(len);
      for (std::size_t i = 0; i < n * count; ++i) stacked(i, j) /= len;
    }
    std::vector<CMatrix> out(count, CMatrix(n, n));
    for (std::size_t c = 0; c < count; ++c)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[c](i, j) = stacked(c * n + i, j);
    return out;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace seqmeas::testing
