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

#include "seqmeas/instruments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "seqmeas/kernels.hpp"

namespace seqmeas {

namespace {

// Sum over the output factor of the Choi matrix: tr Phi(|i><j|) at [i, j].
CMatrix output_trace(const CpMap& phi) {
  const std::size_t din = phi.dim_in(), dout = phi.dim_out();
  CMatrix out(din, din);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < dout; ++a) s += phi.choi()(a * din + i, a * din + j);
      out(i, j) = s;
    }
  return out;
}

void require_phase_space(const WeylSystem& ws, const Instrument& i, const char* what) {
  if (!(i.outcomes() == ws.group()) || i.dim() != ws.dim()) {
    throw DimensionError(std::string(what) + ": instrument is not based on " +
                         ws.group().to_string());
  }
}

}  // namespace

CpMap::CpMap(std::size_t dim_in, std::size_t dim_out, CMatrix choi, const Tolerance& tol)
    : dim_in_(dim_in), dim_out_(dim_out), choi_(std::move(choi)) {
  const std::size_t side = dim_in_ * dim_out_;
  if (side == 0 || choi_.rows() != side || choi_.cols() != side) {
    throw DimensionError("CpMap: Choi matrix must be " + std::to_string(side) + " square");
  }
  if (!choi_.all_finite()) throw InvariantError("CpMap: non-finite Choi entries");
  if (!is_hermitian(choi_, tol) || !is_psd(choi_, tol)) {
    throw InvariantError("CpMap: Choi matrix is not positive (map not completely positive)");
  }
  const CMatrix slack = CMatrix::identity(dim_in_) - output_trace(*this);
  if (!is_psd(slack, tol)) throw InvariantError("CpMap: map increases trace");
}

CpMap CpMap::identity(std::size_t n) {
  return from_action(n, n, [](const CMatrix& t) { return t; });
}

CpMap CpMap::from_kraus(std::span<const CMatrix> kraus) {
  if (kraus.empty()) throw DimensionError("CpMap::from_kraus: no Kraus operators");
  const std::size_t dout = kraus.front().rows(), din = kraus.front().cols();
  CMatrix choi(dout * din, dout * din);
  for (const auto& k : kraus) {
    if (k.rows() != dout || k.cols() != din) throw DimensionError("CpMap::from_kraus: shapes differ");
    // vec(K)[(a, i)] = K[a, i]; choi += vec vec*
    for (std::size_t r = 0; r < dout * din; ++r)
      for (std::size_t c = 0; c < dout * din; ++c)
        choi(r, c) += k(r / din, r % din) * std::conj(k(c / din, c % din));
  }
  return {din, dout, std::move(choi)};
}

CpMap CpMap::from_action(std::size_t dim_in, std::size_t dim_out,
                         const std::function<CMatrix(const CMatrix&)>& action,
                         const Tolerance& tol) {
  CMatrix choi(dim_out * dim_in, dim_out * dim_in);
  for (std::size_t i = 0; i < dim_in; ++i)
    for (std::size_t j = 0; j < dim_in; ++j) {
      const CMatrix image = action(CMatrix::unit(dim_in, i, j));
      if (image.rows() != dim_out || image.cols() != dim_out) {
        throw DimensionError("CpMap::from_action: action returned the wrong shape");
      }
      for (std::size_t a = 0; a < dim_out; ++a)
        for (std::size_t b = 0; b < dim_out; ++b) choi(a * dim_in + i, b * dim_in + j) = image(a, b);
    }
  return {dim_in, dim_out, std::move(choi), tol};
}

CMatrix apply(const CpMap& phi, const CMatrix& t) {
  const std::size_t din = phi.dim_in(), dout = phi.dim_out();
  if (t.rows() != din || t.cols() != din) {
    throw DimensionError("apply: input is " + std::to_string(t.rows()) + "x" +
                         std::to_string(t.cols()) + ", map expects " + std::to_string(din));
  }
  CMatrix out(dout, dout);
  const auto& c = phi.choi();
  for (std::size_t a = 0; a < dout; ++a)
    for (std::size_t b = 0; b < dout; ++b) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < din; ++i)
        for (std::size_t j = 0; j < din; ++j) s += c(a * din + i, b * din + j) * t(i, j);
      out(a, b) = s;
    }
  return out;
}

CMatrix dual_apply(const CpMap& phi, const CMatrix& a) {
  const std::size_t din = phi.dim_in(), dout = phi.dim_out();
  if (a.rows() != dout || a.cols() != dout) {
    throw DimensionError("dual_apply: operator is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", map outputs " + std::to_string(dout));
  }
  // Phi*(A)[j, i] = sum_ab choi[(a, i), (b, j)] A[b, a]
  CMatrix out(din, din);
  const auto& c = phi.choi();
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j) {
      Complex s = 0.0;
      for (std::size_t x = 0; x < dout; ++x)
        for (std::size_t y = 0; y < dout; ++y) s += c(x * din + i, y * din + j) * a(y, x);
      out(j, i) = s;
    }
  return out;
}

std::vector<CMatrix> kraus_operators(const CpMap& phi, double cutoff) {
  const std::size_t din = phi.dim_in(), dout = phi.dim_out();
  const auto ev = eigh(phi.choi());
  std::vector<CMatrix> kraus;
  for (std::size_t k = 0; k < ev.values.size(); ++k) {
    if (ev.values[k] <= cutoff) continue;
    const double scale = std::sqrt(ev.values[k]);
    CMatrix op(dout, din);
    for (std::size_t r = 0; r < dout * din; ++r) op(r / din, r % din) = scale * ev.vectors(r, k);
    kraus.push_back(std::move(op));
  }
  return kraus;
}

Instrument::Instrument(Group outcomes, std::vector<CpMap> maps, const Tolerance& tol)
    : outcomes_(std::move(outcomes)), maps_(std::move(maps)) {
  if (maps_.size() != outcomes_.order()) {
    throw DimensionError("Instrument: " + std::to_string(maps_.size()) + " maps for " +
                         std::to_string(outcomes_.order()) + " outcomes");
  }
  const std::size_t n = maps_.front().dim_in();
  CMatrix total(n, n);
  for (const auto& m : maps_) {
    if (m.dim_in() != n || m.dim_out() != n) throw DimensionError("Instrument: maps differ in dimension");
    total += output_trace(m);
  }
  if (!approx_eq(total, CMatrix::identity(n), tol)) {
    throw InvariantError("Instrument: total map is not trace preserving (defect " +
                         std::to_string(frobenius_distance(total, CMatrix::identity(n))) + ")");
  }
}

Instrument Instrument::trivial(std::size_t n) { return {Group::trivial(), {CpMap::identity(n)}}; }

CovariantMeasure::CovariantMeasure(Group group, std::vector<CMatrix> m, const Tolerance& tol)
    : group_(std::move(group)), m_(std::move(m)) {
  if (m_.size() != group_.order()) {
    throw InvalidMeasure("measure has " + std::to_string(m_.size()) + " densities for " +
                         std::to_string(group_.order()) + " group points");
  }
  const std::size_t n = m_.front().rows();
  double total = 0.0;
  for (std::size_t x = 0; x < m_.size(); ++x) {
    const auto& mx = m_[x];
    if (mx.rows() != n || mx.cols() != n) throw InvalidMeasure("measure densities differ in shape");
    if (!mx.all_finite() || !is_hermitian(mx, tol) || !is_psd(mx, tol)) {
      throw InvalidMeasure("measure density at point " + std::to_string(x) + " is not positive");
    }
    total += mx.trace().real();
  }
  if (std::abs(total - 1.0) > tol.abs_eps) {
    throw InvalidMeasure("measure not normalized: total trace " + std::to_string(total));
  }
}

CovariantMeasure CovariantMeasure::point(const Group& g, std::size_t at, const State& omega) {
  std::vector<CMatrix> m(g.order(), CMatrix(omega.dim(), omega.dim()));
  m.at(at) = omega.matrix();
  return {g, std::move(m)};
}

std::vector<CMatrix> CovariantMeasure::shifted(const WeylSystem& ws) const {
  if (!(ws.group() == group_) || dim() != ws.dim()) {
    throw DimensionError("CovariantMeasure: measure is not on " + ws.group().to_string());
  }
  std::vector<CMatrix> out;
  out.reserve(m_.size());
  for (std::size_t x = 0; x < m_.size(); ++x) {
    const auto& u = ws.translation(x);
    out.push_back(u.adjoint() * m_[x] * u);
  }
  return out;
}

CMatrix CovariantMeasure::total_shifted(const WeylSystem& ws) const {
  CMatrix total(dim(), dim());
  for (const auto& mp : shifted(ws)) total += mp;
  return total;
}

std::vector<double> CovariantMeasure::weights(const WeylSystem& ws) const {
  std::vector<double> nu;
  for (const auto& mp : shifted(ws)) nu.push_back(trace_norm(mp));
  return nu;
}

std::vector<CMatrix> CovariantMeasure::probe_states(const WeylSystem& ws) const {
  std::vector<CMatrix> out;
  for (const auto& mp : shifted(ws)) {
    const double norm = trace_norm(mp);
    out.push_back(norm > 0.0 ? mp * Complex(1.0 / norm) : CMatrix(dim(), dim()));
  }
  return out;
}

CMatrix coupling_unitary(const WeylSystem& ws) {
  const std::size_t n = ws.dim();
  const auto& g = ws.group();
  CMatrix l(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) l(a * n + g.add_index(a, b), a * n + b) = 1.0;
  return l;
}

double coupling_intertwiner_residual(const WeylSystem& ws) {
  const auto& g = ws.group();
  const std::size_t n = ws.dim();
  const CMatrix l = coupling_unitary(ws);
  double worst = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const CMatrix lhs = l * kron(ws.translation(x), ws.translation(y));
      const CMatrix rhs = kron(ws.translation(x), ws.translation(g.add_index(x, y))) * l;
      worst = std::max(worst, frobenius_distance(lhs, rhs));
      const std::size_t chi = x, gamma = y;
      const CMatrix lhs_v = l * kron(ws.modulation(chi), ws.modulation(gamma));
      const CMatrix rhs_v = kron(ws.modulation(g.sub_index(chi, gamma)), ws.modulation(gamma)) * l;
      worst = std::max(worst, frobenius_distance(lhs_v, rhs_v));
    }
  return worst;
}

Instrument standard_instrument(const WeylSystem& ws, const State& omega) {
  const std::size_t n = ws.dim();
  if (omega.dim() != n) throw DimensionError("standard_instrument: probe dimension differs from |G|");
  const CMatrix l = coupling_unitary(ws);
  const CMatrix la = l.adjoint();
  std::vector<CpMap> maps;
  maps.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    const CMatrix pointer = kron(CMatrix::identity(n), ws.position_point(x));
    maps.push_back(CpMap::from_action(n, n, [&](const CMatrix& rho) {
      return partial_trace_second(pointer * l * kron(rho, omega.matrix()) * la, n, n);
    }));
  }
  return {ws.group(), std::move(maps)};
}

Instrument covariant_instrument(const WeylSystem& ws, const CovariantMeasure& mm) {
  auto shifted = mm.shifted(ws);
  // Points carrying no weight drop out of the sum.
  for (auto& mp : shifted)
    if (std::abs(mp.trace()) == 0.0 && mp.frobenius_norm() == 0.0) mp = CMatrix{};
  auto chois = kernels::parallel::covariant_choi(shifted, ws.group().tables());
  std::vector<CpMap> maps;
  maps.reserve(chois.size());
  for (auto& c : chois) maps.emplace_back(ws.dim(), ws.dim(), std::move(c));
  return {ws.group(), std::move(maps)};
}

Povm associated_observable(const Instrument& i) {
  std::vector<CMatrix> effects;
  const CMatrix one = CMatrix::identity(i.dim());
  for (const auto& m : i.maps()) effects.push_back(dual_apply(m, one));
  return {outcome_labels(i.outcomes()), std::move(effects)};
}

Instrument compose_sequential(const Instrument& first, const Instrument& second) {
  if (first.dim() != second.dim()) throw DimensionError("compose_sequential: dimensions differ");
  const std::size_t n = first.dim();
  std::vector<CpMap> maps;
  maps.reserve(first.size() * second.size());
  for (const auto& f : first.maps())
    for (const auto& s : second.maps())
      maps.push_back(CpMap::from_action(n, n, [&](const CMatrix& t) { return apply(s, apply(f, t)); }));
  return {first.outcomes().product(second.outcomes()), std::move(maps)};
}

double verify_covariance(const WeylSystem& ws, const Instrument& i) {
  require_phase_space(ws, i, "verify_covariance");
  const std::size_t n = ws.dim();
  std::vector<kernels::WeylAction> actions;
  actions.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t chi = 0; chi < n; ++chi) actions.push_back({x, ws.weyl_op(x, chi)});
  std::vector<CMatrix> chois;
  chois.reserve(i.size());
  for (const auto& m : i.maps()) chois.push_back(m.choi());
  return kernels::parallel::covariance_residual(chois, actions, ws.group().tables());
}

CovariantMeasure reconstruct_measure(const WeylSystem& ws, const Instrument& i) {
  const double residual = verify_covariance(ws, i);
  if (residual > 1e-6) {
    throw NotCovariant("reconstruct_measure: covariance residual " + std::to_string(residual) +
                       " exceeds 1e-6");
  }
  const auto& g = ws.group();
  const std::size_t n = ws.dim();
  const Complex inv_n = 1.0 / static_cast<double>(n);

  // Fourier transform of the shifted measure, FM'(chi) = sum_x conj(chi(x)) M'(x),
  // from its Weyl coefficients
  //   tr[V_gamma U_y FM'(chi)] = tr[V_chi U_y* sum_x gamma(x) I_x(T)],
  //   T = U_y V_{chi gamma}* / n.
  // The n^2 operators V_gamma U_y are orthogonal with tr[W* W] = n.
  std::vector<CMatrix> fourier(n, CMatrix(n, n));
  for (std::size_t chi = 0; chi < n; ++chi) {
    const CMatrix& v_chi = ws.modulation(chi);
    for (std::size_t gamma = 0; gamma < n; ++gamma) {
      const std::size_t chigamma = g.add_index(chi, gamma);
      for (std::size_t y = 0; y < n; ++y) {
        const CMatrix& u_y = ws.translation(y);
        const CMatrix probe = u_y * ws.modulation(chigamma).adjoint() * inv_n;
        CMatrix smeared(n, n);
        for (std::size_t x = 0; x < n; ++x) smeared += apply(i.map(x), probe) * g.pairing_index(gamma, x);
        const Complex coeff = (v_chi * u_y.adjoint() * smeared).trace();
        fourier[chi] += (ws.modulation(gamma) * u_y).adjoint() * (coeff * inv_n);
      }
    }
  }

  std::vector<CMatrix> m;
  m.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    CMatrix shifted(n, n);
    for (std::size_t chi = 0; chi < n; ++chi) shifted += fourier[chi] * (g.pairing_index(chi, x) * inv_n);
    const auto& u = ws.translation(x);
    CMatrix mx = u * shifted * u.adjoint();
    // Restore exact Hermiticity lost to rounding.
    mx = (mx + mx.adjoint()) * Complex(0.5);
    m.push_back(std::move(mx));
  }
  return {g, std::move(m)};
}

double instrument_distance(const Instrument& a, const Instrument& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) throw DimensionError("instrument_distance: shapes differ");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, frobenius_distance(a.map(k).choi(), b.map(k).choi()));
  return worst;
}

}  // namespace seqmeas
