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

#include "seqmeas/observables.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace seqmeas {

std::vector<Outcome> outcome_labels(const Group& g) {
  std::vector<Outcome> out;
  out.reserve(g.order());
  for (const auto& x : g.enumerate()) out.push_back(x.residues);
  return out;
}

std::vector<Outcome> product_labels(const Group& first, const Group& second) {
  std::vector<Outcome> out;
  out.reserve(first.order() * second.order());
  for (const auto& x : first.enumerate())
    for (const auto& y : second.enumerate()) {
      Outcome label = x.residues;
      label.insert(label.end(), y.residues.begin(), y.residues.end());
      out.push_back(std::move(label));
    }
  return out;
}

State::State(CMatrix matrix, const Tolerance& tol) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.empty()) throw DimensionError("State: matrix must be square");
  if (!matrix_.all_finite()) throw InvariantError("State: non-finite entries");
  if (!is_hermitian(matrix_, tol)) throw InvariantError("State: matrix is not Hermitian");
  if (!is_psd(matrix_, tol)) throw InvariantError("State: matrix is not positive semidefinite");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > tol.abs_eps) {
    throw InvariantError("State: trace is " + std::to_string(tr.real()) + ", expected 1");
  }
}

State State::maximally_mixed(std::size_t n) {
  return State(CMatrix::identity(n) * Complex(1.0 / static_cast<double>(n)));
}

State State::basis(std::size_t n, std::size_t k) { return State(CMatrix::unit(n, k, k)); }

ProbVector::ProbVector(std::vector<Outcome> outcomes, std::vector<double> weights)
    : outcomes_(std::move(outcomes)), weights_(std::move(weights)) {
  if (outcomes_.size() != weights_.size()) {
    throw DimensionError("ProbVector: " + std::to_string(outcomes_.size()) + " outcomes but " +
                         std::to_string(weights_.size()) + " weights");
  }
  double total = 0.0;
  for (auto& w : weights_) {
    if (!std::isfinite(w) || w < -1e-12) {
      throw InvariantError("ProbVector: weight " + std::to_string(w) + " is not a probability");
    }
    if (w < 0.0) w = 0.0;
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvariantError("ProbVector: weights sum to " + std::to_string(total));
  }
}

ProbVector ProbVector::point_mass(const Group& g, std::size_t at) {
  std::vector<double> w(g.order(), 0.0);
  w.at(at) = 1.0;
  return {outcome_labels(g), std::move(w)};
}

ProbVector ProbVector::uniform(const Group& g) {
  return {outcome_labels(g), std::vector<double>(g.order(), 1.0 / static_cast<double>(g.order()))};
}

Povm::Povm(std::vector<Outcome> outcomes, std::vector<CMatrix> effects, const Tolerance& tol)
    : outcomes_(std::move(outcomes)), effects_(std::move(effects)) {
  if (effects_.empty()) throw InvariantError("Povm: no effects");
  if (outcomes_.size() != effects_.size()) {
    throw DimensionError("Povm: " + std::to_string(outcomes_.size()) + " outcomes but " +
                         std::to_string(effects_.size()) + " effects");
  }
  dim_ = effects_.front().rows();
  CMatrix total(dim_, dim_);
  for (std::size_t k = 0; k < effects_.size(); ++k) {
    const auto& e = effects_[k];
    if (e.rows() != dim_ || e.cols() != dim_) throw DimensionError("Povm: effects differ in shape");
    if (!is_hermitian(e, tol) || !is_psd(e, tol)) {
      throw InvariantError("Povm: effect " + std::to_string(k) + " is not positive");
    }
    total += e;
  }
  if (!approx_eq(total, CMatrix::identity(dim_), tol)) {
    throw InvariantError("Povm: effects sum to the identity only up to " +
                         std::to_string(frobenius_distance(total, CMatrix::identity(dim_))));
  }
}

ProbVector measure(const Povm& p, const State& rho) {
  if (p.dim() != rho.dim()) throw DimensionError("measure: POVM and state dimensions differ");
  std::vector<double> w(p.size());
  const auto& r = rho.matrix();
  for (std::size_t k = 0; k < p.size(); ++k) {
    // tr(rho E) without forming the product.
    const auto& e = p.effect(k);
    Complex s = 0.0;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j) s += r(i, j) * e(j, i);
    w[k] = s.real();
  }
  return {p.outcomes(), std::move(w)};
}

Povm sharp_position_povm(const WeylSystem& ws) {
  std::vector<CMatrix> effects;
  for (std::size_t x = 0; x < ws.dim(); ++x) effects.push_back(ws.position_point(x));
  return {outcome_labels(ws.group()), std::move(effects)};
}

Povm sharp_momentum_povm(const WeylSystem& ws) {
  std::vector<CMatrix> effects;
  for (std::size_t chi = 0; chi < ws.dim(); ++chi) effects.push_back(ws.momentum_point(chi));
  return {outcome_labels(ws.group()), std::move(effects)};
}

Povm smear_position(const WeylSystem& ws, const ProbVector& sigma) {
  const auto& g = ws.group();
  if (sigma.size() != g.order()) throw DimensionError("smear_position: sigma is not a measure on G");
  std::vector<CMatrix> effects;
  for (std::size_t xp = 0; xp < g.order(); ++xp) {
    std::vector<Complex> diag(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) diag[x] = sigma[g.sub_index(xp, x)];
    effects.push_back(CMatrix::diagonal(diag));
  }
  return {outcome_labels(g), std::move(effects)};
}

Povm smear_momentum(const WeylSystem& ws, const ProbVector& tau) {
  const auto& g = ws.group();
  if (tau.size() != g.order()) throw DimensionError("smear_momentum: tau is not a measure on the dual");
  std::vector<CMatrix> effects;
  for (std::size_t cp = 0; cp < g.order(); ++cp) {
    CMatrix e(ws.dim(), ws.dim());
    for (std::size_t chi = 0; chi < g.order(); ++chi) {
      const double w = tau[g.sub_index(cp, chi)];
      if (w != 0.0) e += ws.momentum_point(chi) * Complex(w);
    }
    effects.push_back(std::move(e));
  }
  return {outcome_labels(g), std::move(effects)};
}

Povm cpso_from_state(const WeylSystem& ws, const State& s) {
  const std::size_t n = ws.dim();
  if (s.dim() != n) throw DimensionError("cpso_from_state: state dimension differs from |G|");
  std::vector<CMatrix> effects(n * n);
  const Complex scale = 1.0 / static_cast<double>(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t chi = 0; chi < n; ++chi) {
      const CMatrix w = ws.weyl_op(x, chi);
      effects[x * n + chi] = w * s.matrix() * w.adjoint() * scale;
    }
  return {product_labels(ws.group(), ws.group()), std::move(effects)};
}

std::size_t effect_span_rank(const Povm& p, double relative_cutoff) {
  const std::size_t n = p.dim();
  // Orthonormal real coordinates on Hermitian matrices.
  Eigen::MatrixXd coords(static_cast<Eigen::Index>(n * n), static_cast<Eigen::Index>(p.size()));
  const double root2 = std::numbers::sqrt2;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& e = p.effect(k);
    Eigen::Index r = 0;
    const auto col = static_cast<Eigen::Index>(k);
    for (std::size_t i = 0; i < n; ++i) {
      coords(r++, col) = e(i, i).real();
      for (std::size_t j = i + 1; j < n; ++j) {
        coords(r++, col) = root2 * e(i, j).real();
        coords(r++, col) = root2 * e(i, j).imag();
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(coords);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > relative_cutoff * s(0)) ++rank;
  return rank;
}

bool is_informationally_complete(const Povm& p, double relative_cutoff) {
  return effect_span_rank(p, relative_cutoff) == p.dim() * p.dim();
}

double verify_cpso_covariance(const WeylSystem& ws, const Povm& p) {
  const std::size_t n = ws.dim();
  if (p.size() != n * n || p.dim() != n) {
    throw DimensionError("verify_cpso_covariance: POVM is not indexed by G x dual(G)");
  }
  const auto& g = ws.group();
  const auto pairs = static_cast<long>(n * n);
  double worst = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
  for (long t = 0; t < pairs; ++t) {
    const auto x = static_cast<std::size_t>(t) / n, chi = static_cast<std::size_t>(t) % n;
    const CMatrix w = ws.weyl_op(x, chi);
    const CMatrix wa = w.adjoint();
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t gamma = 0; gamma < n; ++gamma) {
        const auto& target = p.effect(g.add_index(x, y) * n + g.add_index(chi, gamma));
        const double r = frobenius_distance(target, w * p.effect(y * n + gamma) * wa);
        worst = std::max(worst, r);
      }
  }
  return worst;
}

Povm marginal_position(const WeylSystem& ws, const Povm& joint) {
  const std::size_t n = ws.dim();
  if (joint.size() != n * n) throw DimensionError("marginal_position: POVM is not on G x dual(G)");
  std::vector<CMatrix> effects(n, CMatrix(joint.dim(), joint.dim()));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t chi = 0; chi < n; ++chi) effects[x] += joint.effect(x * n + chi);
  return {outcome_labels(ws.group()), std::move(effects)};
}

Povm marginal_momentum(const WeylSystem& ws, const Povm& joint) {
  const std::size_t n = ws.dim();
  if (joint.size() != n * n) throw DimensionError("marginal_momentum: POVM is not on G x dual(G)");
  std::vector<CMatrix> effects(n, CMatrix(joint.dim(), joint.dim()));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t chi = 0; chi < n; ++chi) effects[chi] += joint.effect(x * n + chi);
  return {outcome_labels(ws.group()), std::move(effects)};
}

double max_effect_distance(const Povm& a, const Povm& b) {
  if (a.size() != b.size()) throw DimensionError("max_effect_distance: outcome counts differ");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, frobenius_distance(a.effect(k), b.effect(k)));
  return worst;
}

}  // namespace seqmeas
