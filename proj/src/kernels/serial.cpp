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

#include <algorithm>
#include <cmath>

#include "seqmeas/kernels.hpp"

namespace seqmeas::kernels {

namespace detail {

void gemm_row(const CMatrix& a, const CMatrix& b, std::size_t i, CMatrix& out) {
  const std::size_t inner = a.cols(), cols = b.cols();
  for (std::size_t k = 0; k < inner; ++k) {
    const Complex aik = a(i, k);
    if (aik == Complex{0.0, 0.0}) continue;
    for (std::size_t j = 0; j < cols; ++j) out(i, j) += aik * b(k, j);
  }
}

void covariant_choi_outcome(std::span<const CMatrix> shifted, const GroupTables& g,
                            std::size_t k, CMatrix& out) {
  const std::size_t n = g.order;
  // Rows and columns are (output a, input i) -> a * n + i.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t h = g.diff(i, a);
      const CMatrix& m = shifted[h];
      if (m.empty()) continue;
      const std::size_t row = g.diff(k, i);
      for (std::size_t b = 0; b < n; ++b) {
        // j - b must equal h
        const std::size_t j = g.sum(b, h);
        out(a * n + i, b * n + j) = m(row, g.diff(k, j));
      }
    }
}

double covariance_residual_one(std::span<const CMatrix> choi, const WeylAction& action,
                               const GroupTables& g, std::size_t k) {
  const std::size_t n = g.order;
  const CMatrix lift = kron(action.unitary, action.unitary.conj());
  const CMatrix moved = serial::gemm(serial::gemm(lift, choi[k]), lift.adjoint());
  const CMatrix& target = choi[g.sum(action.shift, k)];
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          s += std::norm(target(a * n + i, b * n + j) - moved(a * n + i, b * n + j));
      worst = std::max(worst, std::sqrt(s));
    }
  return worst;
}

}  // namespace detail

namespace serial {

CMatrix gemm(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("gemm: inner dimensions differ");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) detail::gemm_row(a, b, i, out);
  return out;
}

std::vector<CMatrix> covariant_choi(std::span<const CMatrix> shifted, const GroupTables& g) {
  const std::size_t n = g.order;
  std::vector<CMatrix> out(n, CMatrix(n * n, n * n));
  for (std::size_t k = 0; k < n; ++k) detail::covariant_choi_outcome(shifted, g, k, out[k]);
  return out;
}

double covariance_residual(std::span<const CMatrix> choi, std::span<const WeylAction> actions,
                           const GroupTables& g) {
  double worst = 0.0;
  for (const auto& action : actions)
    for (std::size_t k = 0; k < g.order; ++k)
      worst = std::max(worst, detail::covariance_residual_one(choi, action, g, k));
  return worst;
}

}  // namespace serial

}  // namespace seqmeas::kernels
