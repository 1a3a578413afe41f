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

// Data-parallel kernels behind the hot loops of the library.
//
// Every kernel exists twice with identical arithmetic: `serial` is the
// reference used by tests and the benchmark baseline, `parallel` is the
// OpenMP version the library calls. Both operate on flat index tables so
// they stay independent of the group and Weyl abstractions above them.

#include <cstddef>
#include <span>
#include <vector>

#include "seqmeas/algebra.hpp"

namespace seqmeas::kernels {

/// Integer arithmetic of a finite abelian group of order n, by basis index.
struct GroupTables {
  std::size_t order = 0;
  std::vector<std::size_t> add;  // add[i * order + j] = idx(x_i + x_j)
  std::vector<std::size_t> neg;  // neg[i] = idx(-x_i)

  std::size_t sum(std::size_t i, std::size_t j) const { return add[i * order + j]; }
  std::size_t diff(std::size_t i, std::size_t j) const { return add[i * order + neg[j]]; }
};

/// One element of the covariance sweep: the outcome shift and the unitary
/// W = U_x V_chi acting on the system.
struct WeylAction {
  std::size_t shift = 0;
  CMatrix unitary;
};

namespace serial {

CMatrix gemm(const CMatrix& a, const CMatrix& b);

/// Choi matrices, one per outcome k, of the covariant instrument whose
/// translated measure densities are `shifted` (M'(h) = U_h* M(h) U_h):
///   Phi_k(|i><j|)[a,b] = M'(i-a)[k-i, k-j]  if i-a == j-b, else 0.
std::vector<CMatrix> covariant_choi(std::span<const CMatrix> shifted, const GroupTables& g);

/// max over actions, outcomes k and matrix units |i><j| of
///   || Phi_{shift+k}(E_ij) - W Phi_k(W* E_ij W) W* ||_F.
double covariance_residual(std::span<const CMatrix> choi, std::span<const WeylAction> actions,
                           const GroupTables& g);

}  // namespace serial

namespace parallel {

CMatrix gemm(const CMatrix& a, const CMatrix& b);
std::vector<CMatrix> covariant_choi(std::span<const CMatrix> shifted, const GroupTables& g);
double covariance_residual(std::span<const CMatrix> choi, std::span<const WeylAction> actions,
                           const GroupTables& g);

}  // namespace parallel

namespace detail {
// Shared by both variants so they agree bit for bit.
void covariant_choi_outcome(std::span<const CMatrix> shifted, const GroupTables& g,
                            std::size_t k, CMatrix& out);
double covariance_residual_one(std::span<const CMatrix> choi, const WeylAction& action,
                               const GroupTables& g, std::size_t k);
void gemm_row(const CMatrix& a, const CMatrix& b, std::size_t i, CMatrix& out);
}  // namespace detail

}  // namespace seqmeas::kernels
