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

#include "seqmeas/kernels.hpp"

namespace seqmeas::kernels::parallel {

CMatrix gemm(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("gemm: inner dimensions differ");
  CMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<long>(a.rows());
  // Below this size thread start-up dominates.
  const bool wide = a.rows() * a.cols() * b.cols() >= 32768;
#pragma omp parallel for schedule(static) if (wide)
  for (long i = 0; i < rows; ++i) detail::gemm_row(a, b, static_cast<std::size_t>(i), out);
  return out;
}

std::vector<CMatrix> covariant_choi(std::span<const CMatrix> shifted, const GroupTables& g) {
  const std::size_t n = g.order;
  std::vector<CMatrix> out(n, CMatrix(n * n, n * n));
  const auto outcomes = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < outcomes; ++k)
    detail::covariant_choi_outcome(shifted, g, static_cast<std::size_t>(k), out[static_cast<std::size_t>(k)]);
  return out;
}

double covariance_residual(std::span<const CMatrix> choi, std::span<const WeylAction> actions,
                           const GroupTables& g) {
  const auto total = static_cast<long>(actions.size() * g.order);
  double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
  for (long t = 0; t < total; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    worst = std::max(worst, detail::covariance_residual_one(choi, actions[idx / g.order], g,
                                                             idx % g.order));
  }
  return worst;
}

}  // namespace seqmeas::kernels::parallel
