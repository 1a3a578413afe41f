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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "seqmeas/error.hpp"

namespace seqmeas {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major.
///
/// Every operator in the library (states, effects, unitaries, Choi matrices)
/// lives in one of these. Tensor products follow a single index convention:
/// the basis vector e_x (x) e_y of a product space with second factor of
/// dimension d2 has index idx(x) * d2 + idx(y).
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static CMatrix diagonal(std::span<const Complex> diag);
  // |ket><bra|
  static CMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);
  // Matrix unit |i><j| of an n x n space.
  static CMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conj() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  // Throws InvariantError unless both are strictly positive.
  void validate() const;
};

/// Kronecker product; (a (x) b)[(i,k),(j,l)] = a[i,j] * b[k,l].
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Partial trace over the second tensor factor of a (dim1*dim2)-square matrix.
CMatrix partial_trace_second(const CMatrix& t, std::size_t dim1, std::size_t dim2);

/// Entrywise (Hadamard) product.
CMatrix hadamard(const CMatrix& a, const CMatrix& b);

// ||a - b||_F
double frobenius_distance(const CMatrix& a, const CMatrix& b);

// ||a - a*||_F <= abs + rel * ||a||_F
bool is_hermitian(const CMatrix& t, const Tolerance& tol = {});

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are eigenvectors
};

/// Eigendecomposition of the Hermitian part of a square matrix.
HermitianEigen eigh(const CMatrix& t);

/// True iff the smallest eigenvalue is >= -abs_eps * (1 + ||t||_op).
/// Throws HermiticityError for matrices that are not Hermitian within tol.
bool is_psd(const CMatrix& t, const Tolerance& tol = {});

/// Singular values, descending, computed from the eigenvalues of t* t.
std::vector<double> singular_values(const CMatrix& t);

double trace_norm(const CMatrix& t);

// Largest singular value.
double operator_norm(const CMatrix& t);

/// Frobenius distance <= abs_eps + rel_eps * max(||a||_F, ||b||_F).
bool approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});

}  // namespace seqmeas
