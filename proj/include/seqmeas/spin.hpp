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

#include <array>

#include "seqmeas/observables.hpp"

namespace seqmeas {

using Vec3 = std::array<double, 3>;

/// sigma . n = n_x sigma_x + n_y sigma_y + n_z sigma_z
CMatrix sigma_dot(const Vec3& n);

/// Qubit state (1 + r . sigma) / 2; throws InvariantError when |r| > 1.
State bloch_state(const Vec3& r);

/// Bloch vector of a qubit state.
Vec3 bloch_vector(const State& rho);

/// Two orthogonal spin directions a, b and the eigenbasis e^a_+, e^a_- of
/// sigma . a, with phases fixed by (sigma . b) e^a_+ = e^a_-.
///
/// e^a_+ has its largest-magnitude component real and positive.
class SpinFrame {
 public:
  /// Normalizes a and b; throws FrameError unless they are nonzero and
  /// orthogonal within 1e-10 after normalization.
  SpinFrame(const Vec3& a, const Vec3& b);

  const Vec3& a() const { return a_; }
  const Vec3& b() const { return b_; }

  /// Unitary whose columns are e^a_+, e^a_- in the computational basis.
  const CMatrix& basis() const { return basis_; }

  /// Expresses an operator in the e^a basis: <e^a_i| t |e^a_j>.
  CMatrix to_frame(const CMatrix& t) const;
  CMatrix from_frame(const CMatrix& t) const;

 private:
  Vec3 a_;
  Vec3 b_;
  CMatrix basis_;
};

enum class SpinAxis { a, b };

/// {S(+1), S(-1)} with S(+-1) = (1 +- n . sigma) / 2, outcomes labelled +1, -1.
Povm spin_povm(const SpinFrame& frame, SpinAxis axis);

/// {(1 +- s n . sigma) / 2}
Povm unsharp_spin_povm(const SpinFrame& frame, SpinAxis axis, double s);

struct UnsharpSpin {
  double s = 0.0;  // 2 tr[omega S^a(+1)] - 1
  double t = 0.0;  // 2 tr[omega S^b(+1)] - 1
  Povm position;   // S^{sa}
  Povm momentum;   // S^{tb}
};

UnsharpSpin unsharp_spin(const SpinFrame& frame, const State& omega);

/// s^2 + t^2
double tradeoff_check(const SpinFrame& frame, const State& omega);

/// Which coupling is used to build I^omega_k.
enum class CouplingBasis {
  frame,          // L permutes the e^a basis, as the factorization requires
  computational,  // L permutes the computational basis regardless of a
};

/// max over k, i, j of |<e_i| I^omega_k(rho) |e_j> - rho_ij (U_k omega U_k)_ij|
/// in the e^a basis, with the pointer S^a and U_+ = 1, U_- = sigma . b.
double kronecker_factorization_check(const SpinFrame& frame, const State& omega, const State& rho,
                                     CouplingBasis coupling = CouplingBasis::frame);

/// Largest deviation between the frame's Weyl pair U_- = sigma . b,
/// V_- = sigma . a, its Fourier operator, and the Z_2 Schrodinger
/// representation, after moving to the e^a basis.
double frame_weyl_residual(const SpinFrame& frame);

}  // namespace seqmeas
