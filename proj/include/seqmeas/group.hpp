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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "seqmeas/algebra.hpp"
#include "seqmeas/kernels.hpp"

namespace seqmeas {

/// x in G, as residues (x_1 mod d_1, ..., x_k mod d_k).
struct GroupElement {
  std::vector<int> residues;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A character chi of G. The dual is identified with G through the pairing
/// chi(x) = exp(2 pi i sum_j chi_j x_j / d_j), so it shares G's residue shape.
struct DualElement {
  std::vector<int> residues;
  friend bool operator==(const DualElement&, const DualElement&) = default;
};

/// G = Z_{d_1} x ... x Z_{d_k} with counting measure on G and on its dual.
///
/// Elements are enumerated lexicographically by residues (zero first); that
/// order is the basis order of L^2(G) used by every matrix in the library.
class Group {
 public:
  explicit Group(std::vector<int> moduli);

  /// Parses "2", "2x3", "4x2x2".
  static Group parse(std::string_view spec);

  /// The one-point outcome space. Only used as the outcome set of
  /// single-outcome instruments; it is not a valid phase-space group.
  static Group trivial();

  /// Direct product; its enumeration index is idx(x) * other.order() + idx(y).
  Group product(const Group& other) const;

  const std::vector<int>& moduli() const { return moduli_; }
  std::size_t order() const { return order_; }
  // Fourier normalization c = n^(-1/2).
  double fourier_constant() const { return c_; }
  bool is_trivial() const { return moduli_.empty(); }
  std::string to_string() const;

  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

  DualElement dual_zero() const;
  DualElement dual_mul(const DualElement& a, const DualElement& b) const;
  DualElement dual_inv(const DualElement& a) const;

  Complex pairing(const DualElement& chi, const GroupElement& x) const;

  std::vector<GroupElement> enumerate() const;
  std::size_t index(const GroupElement& x) const;
  std::size_t index(const DualElement& chi) const;
  GroupElement element(std::size_t idx) const;
  DualElement dual_element(std::size_t idx) const;

  // Index-level arithmetic, cached at construction.
  std::size_t add_index(std::size_t i, std::size_t j) const { return tables_.sum(i, j); }
  std::size_t neg_index(std::size_t i) const { return tables_.neg[i]; }
  std::size_t sub_index(std::size_t i, std::size_t j) const { return tables_.diff(i, j); }
  Complex pairing_index(std::size_t chi, std::size_t x) const { return pairing_[chi * order_ + x]; }
  const kernels::GroupTables& tables() const { return tables_; }

  friend bool operator==(const Group& a, const Group& b) { return a.moduli_ == b.moduli_; }

 private:
  Group() = default;
  void build_tables();
  void check_shape(const std::vector<int>& residues, const char* what) const;

  std::vector<int> moduli_;
  std::size_t order_ = 1;
  double c_ = 1.0;
  kernels::GroupTables tables_;
  std::vector<Complex> pairing_;
};

/// Unitary Fourier matrix F[chi, x] = c * conj(chi(x)).
CMatrix fourier_matrix(const Group& g);

}  // namespace seqmeas
