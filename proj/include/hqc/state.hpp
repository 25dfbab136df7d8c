// Copyright 2026 The hqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Two-qubit states in the density-matrix and Pauli-correlation ("R")
// pictures. The product basis is ordered |00>, |01>, |10>, |11> with sigma_3
// diagonal in {|0>, |1>}; qubit A is the left tensor factor.

#include "hqc/types.hpp"

namespace hqc {

inline constexpr double kStateTol = 1e-10;

/// sigma_0 = identity, sigma_1..3 = Pauli X, Y, Z.
const CMat2 &pauli(int i);

/// sigma_i (x) sigma_j as a 4x4 matrix, i, j in 0..3.
const CMat4 &pauli_product(int i, int j);

CMat4 kron(const CMat2 &left, const CMat2 &right);

/// A validated two-qubit density matrix. The only way to obtain one is
/// through `validate`, so holding a DensityMatrix means the Hermiticity, unit
/// trace and positivity invariants held within the tolerance used.
class DensityMatrix {
   public:
    /// Checks the invariants and returns the input unchanged. Never repairs.
    /// Throws Error{NotHermitian | TraceNotOne | NotPositive}.
    static DensityMatrix validate(const CMat4 &m, double tol = kStateTol);

    const CMat4 &matrix() const noexcept { return m_; }
    cplx operator()(int i, int j) const { return m_(i, j); }

   private:
    explicit DensityMatrix(const CMat4 &m) : m_(m) {}
    CMat4 m_;
};

inline DensityMatrix validate_state(const CMat4 &m, double tol = kStateTol) {
    return DensityMatrix::validate(m, tol);
}

/// R_ij = Tr[(sigma_i (x) sigma_j) rho]. Row 0 holds (1, b), column 0 holds
/// (1, a); the lower-right 3x3 block is the correlation matrix T.
class RMatrix {
   public:
    /// Identity/4 in the R picture.
    RMatrix();
    /// Throws DomainError unless |r(0,0) - 1| <= 1e-10.
    explicit RMatrix(const Mat4 &r);

    static RMatrix from_parts(const Vec3 &a, const Vec3 &b, const Mat3 &t);

    const Mat4 &matrix() const noexcept { return r_; }
    double operator()(int i, int j) const { return r_(i, j); }

    Vec3 a() const { return r_.block<3, 1>(1, 0); }
    Vec3 b() const { return r_.block<1, 3>(0, 1).transpose(); }
    Mat3 t() const { return r_.block<3, 3>(1, 1); }

    /// The same state with the roles of A and B exchanged (R -> R^T).
    RMatrix swapped() const;

   private:
    Mat4 r_;
};

RMatrix to_r_picture(const DensityMatrix &rho);

/// rho = 1/4 sum_ij R_ij sigma_i (x) sigma_j. Throws NotPositive when R is
/// not the R picture of a physical state.
DensityMatrix from_r_picture(const RMatrix &r, double tol = kStateTol);

/// Reduced state of A (trace over B) and of B (trace over A).
CMat2 reduced_a(const CMat4 &rho);
CMat2 reduced_b(const CMat4 &rho);

/// Bloch vector of a single-qubit operator: v_i = Re Tr[sigma_i m].
Vec3 bloch_vector(const CMat2 &m);

/// SO(3) image of a single-qubit unitary: (R_U)_ij = 1/2 Tr[sigma_i U sigma_j U^dag].
Mat3 bloch_rotation(const CMat2 &u);

/// Partial transpose on subsystem B.
CMat4 partial_transpose_b(const CMat4 &rho);

/// Swap of the two qubits: SWAP rho SWAP.
CMat4 swap_qubits(const CMat4 &rho);

struct SteeredState {
    Vec3 bloch;
    double probability;
};

/// Bob's conditional Bloch vector after Alice obtains the POVM effect
/// 1/2 (1 + gamma . sigma). For Alice's conditional state pass `r.swapped()`.
/// Throws DomainError when |gamma| > 1 and ZeroProbability when the effect
/// never occurs.
SteeredState steered_bloch(const RMatrix &r, const Vec3 &gamma);

namespace detail {
/// R picture of an arbitrary (possibly unnormalised) Hermitian matrix, with
/// no validation and no normalisation.
Mat4 raw_r_picture(const CMat4 &m);
}  // namespace detail

}  // namespace hqc
