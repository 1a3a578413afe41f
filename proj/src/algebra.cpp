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

#include "seqmeas/algebra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "seqmeas/kernels.hpp"

namespace seqmeas {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMatrix> as_eigen(const CMatrix& m) {
  return {m.data().data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

void require_square(const CMatrix& t, const char* what) {
  if (!t.is_square()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(t.rows()) + "x" +
                         std::to_string(t.cols()) + ", expected square");
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("CMatrix: " + std::to_string(data_.size()) + " entries for a " +
                         std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("CMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  CMatrix m(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  return m;
}

CMatrix CMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  CMatrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

CMatrix CMatrix::conj() const {
  CMatrix m = *this;
  for (auto& z : m.data_) z = std::conj(z);
  return m;
}

Complex CMatrix::trace() const {
  require_square(*this, "trace");
  Complex s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return kernels::parallel::gemm(a, b); }

void Tolerance::validate() const {
  if (!(abs_eps > 0.0) || !(rel_eps > 0.0)) {
    throw InvariantError("Tolerance: abs_eps and rel_eps must be strictly positive");
  }
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  CMatrix out(a.rows() * br, a.cols() * bc);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out(i * br + k, j * bc + l) = aij * b(k, l);
    }
  return out;
}

CMatrix partial_trace_second(const CMatrix& t, std::size_t dim1, std::size_t dim2) {
  if (t.rows() != dim1 * dim2 || t.cols() != dim1 * dim2) {
    throw DimensionError("partial_trace_second: matrix is " + std::to_string(t.rows()) + "x" +
                         std::to_string(t.cols()) + ", expected " +
                         std::to_string(dim1 * dim2) + " square");
  }
  CMatrix out(dim1, dim1);
  for (std::size_t i = 0; i < dim1; ++i)
    for (std::size_t j = 0; j < dim1; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < dim2; ++k) s += t(i * dim2 + k, j * dim2 + k);
      out(i, j) = s;
    }
  return out;
}

CMatrix hadamard(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "hadamard");
  CMatrix out = a;
  auto od = out.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < od.size(); ++k) od[k] *= bd[k];
  return out;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  double s = 0.0;
  auto ad = a.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < ad.size(); ++k) s += std::norm(ad[k] - bd[k]);
  return std::sqrt(s);
}

bool is_hermitian(const CMatrix& t, const Tolerance& tol) {
  if (!t.is_square()) return false;
  return frobenius_distance(t, t.adjoint()) <= tol.abs_eps + tol.rel_eps * t.frobenius_norm();
}

HermitianEigen eigh(const CMatrix& t) {
  require_square(t, "eigh");
  const std::size_t n = t.rows();
  if (n == 0) return {};
  EigenMatrix h = as_eigen(t);
  h = (0.5 * (h + h.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw Error("eigh: eigensolver did not converge");
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.vectors(i, j) = solver.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

bool is_psd(const CMatrix& t, const Tolerance& tol) {
  require_square(t, "is_psd");
  if (!is_hermitian(t, tol)) throw HermiticityError("is_psd: matrix is not Hermitian within tolerance");
  const auto ev = eigh(t);
  if (ev.values.empty()) return true;
  const double norm = std::max(std::abs(ev.values.front()), std::abs(ev.values.back()));
  return ev.values.front() >= -tol.abs_eps * (1.0 + norm);
}

std::vector<double> singular_values(const CMatrix& t) {
  if (t.empty()) return {};
  const Eigen::JacobiSVD<EigenMatrix> svd(as_eigen(t));
  const auto& v = svd.singularValues();
  std::vector<double> s(v.data(), v.data() + v.size());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

double trace_norm(const CMatrix& t) {
  require_square(t, "trace_norm");
  double s = 0.0;
  for (double v : singular_values(t)) s += v;
  return s;
}

double operator_norm(const CMatrix& t) {
  const auto s = singular_values(t);
  return s.empty() ? 0.0 : s.front();
}

bool approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  require_same_shape(a, b, "approx_eq");
  return frobenius_distance(a, b) <=
         tol.abs_eps + tol.rel_eps * std::max(a.frobenius_norm(), b.frobenius_norm());
}

}  // namespace seqmeas
