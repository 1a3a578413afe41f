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

#include "seqmeas/group.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace seqmeas {

Group::Group(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw GroupError("Group: at least one modulus is required");
  for (int d : moduli_) {
    if (d < 2) throw GroupError("Group: modulus " + std::to_string(d) + " is below 2");
  }
  build_tables();
}

Group Group::parse(std::string_view spec) {
  std::vector<int> moduli;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t end = std::min(spec.find('x', pos), spec.size());
    const auto piece = spec.substr(pos, end - pos);
    int d = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), d);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw GroupError("Group: cannot parse '" + std::string(spec) + "' (expected e.g. 2x3)");
    }
    moduli.push_back(d);
    pos = end + 1;
  }
  return Group(std::move(moduli));
}

Group Group::trivial() {
  Group g;
  g.build_tables();
  return g;
}

Group Group::product(const Group& other) const {
  std::vector<int> moduli = moduli_;
  moduli.insert(moduli.end(), other.moduli_.begin(), other.moduli_.end());
  if (moduli.empty()) return trivial();
  return Group(std::move(moduli));
}

void Group::build_tables() {
  order_ = 1;
  for (int d : moduli_) order_ *= static_cast<std::size_t>(d);
  c_ = 1.0 / std::sqrt(static_cast<double>(order_));

  tables_.order = order_;
  tables_.add.resize(order_ * order_);
  tables_.neg.resize(order_);
  pairing_.resize(order_ * order_);
  for (std::size_t i = 0; i < order_; ++i) {
    const auto x = element(i);
    tables_.neg[i] = index(neg(x));
    for (std::size_t j = 0; j < order_; ++j) {
      const auto y = element(j);
      tables_.add[i * order_ + j] = index(add(x, y));
      pairing_[i * order_ + j] = pairing(DualElement{x.residues}, y);
    }
  }
}

std::string Group::to_string() const {
  if (moduli_.empty()) return "1";
  std::string s;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (j) s += 'x';
    s += std::to_string(moduli_[j]);
  }
  return s;
}

void Group::check_shape(const std::vector<int>& residues, const char* what) const {
  if (residues.size() != moduli_.size()) {
    throw GroupError(std::string(what) + ": element has " + std::to_string(residues.size()) +
                     " residues, group " + to_string() + " has " +
                     std::to_string(moduli_.size()));
  }
}

GroupElement Group::zero() const { return {std::vector<int>(moduli_.size(), 0)}; }

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
  check_shape(a.residues, "add");
  check_shape(b.residues, "add");
  GroupElement out{std::vector<int>(moduli_.size())};
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const int d = moduli_[j];
    out.residues[j] = (((a.residues[j] + b.residues[j]) % d) + d) % d;
  }
  return out;
}

GroupElement Group::neg(const GroupElement& a) const {
  check_shape(a.residues, "neg");
  GroupElement out{std::vector<int>(moduli_.size())};
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const int d = moduli_[j];
    out.residues[j] = ((-a.residues[j] % d) + d) % d;
  }
  return out;
}

DualElement Group::dual_zero() const { return {zero().residues}; }

DualElement Group::dual_mul(const DualElement& a, const DualElement& b) const {
  return {add(GroupElement{a.residues}, GroupElement{b.residues}).residues};
}

DualElement Group::dual_inv(const DualElement& a) const {
  return {neg(GroupElement{a.residues}).residues};
}

Complex Group::pairing(const DualElement& chi, const GroupElement& x) const {
  check_shape(chi.residues, "pairing");
  check_shape(x.residues, "pairing");
  // Accumulate the phase as an exact fraction of a full turn per factor.
  double turns = 0.0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const long d = moduli_[j];
    const long prod = ((static_cast<long>(chi.residues[j]) * x.residues[j]) % d + d) % d;
    turns += static_cast<double>(prod) / static_cast<double>(d);
  }
  turns -= std::floor(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

std::vector<GroupElement> Group::enumerate() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

std::size_t Group::index(const GroupElement& x) const {
  check_shape(x.residues, "index");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const int d = moduli_[j];
    if (x.residues[j] < 0 || x.residues[j] >= d) {
      throw GroupError("index: residue " + std::to_string(x.residues[j]) + " not reduced mod " +
                       std::to_string(d));
    }
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(x.residues[j]);
  }
  return idx;
}

std::size_t Group::index(const DualElement& chi) const { return index(GroupElement{chi.residues}); }

GroupElement Group::element(std::size_t idx) const {
  if (idx >= order_) throw GroupError("element: index " + std::to_string(idx) + " out of range");
  GroupElement x{std::vector<int>(moduli_.size())};
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    const auto d = static_cast<std::size_t>(moduli_[j]);
    x.residues[j] = static_cast<int>(idx % d);
    idx /= d;
  }
  return x;
}

DualElement Group::dual_element(std::size_t idx) const { return {element(idx).residues}; }

CMatrix fourier_matrix(const Group& g) {
  const std::size_t n = g.order();
  CMatrix f(n, n);
  for (std::size_t chi = 0; chi < n; ++chi)
    for (std::size_t x = 0; x < n; ++x) f(chi, x) = g.fourier_constant() * std::conj(g.pairing_index(chi, x));
  return f;
}

}  // namespace seqmeas
