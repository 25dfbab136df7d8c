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

// CHSH and F3 values, their closed-form maxima over measurements, the PPT
// test, and brute-force measurement searches used as oracles for the closed
// forms. Both inequalities are normalised so the classical bound is 1; the
// quantum maxima are sqrt(2) (CHSH) and sqrt(3) (F3).

#include "hqc/state.hpp"

namespace hqc {

/// A dichotomic spin observable direction . sigma with a unit direction.
class Measurement {
   public:
    /// Throws DomainError unless ||direction| - 1| <= 1e-10.
    explicit Measurement(const Vec3 &direction);
    /// Rescales a nonzero vector to unit length.
    static Measurement along(const Vec3 &v);

    const Vec3 &direction() const noexcept { return dir_; }

   private:
    Vec3 dir_;
};

/// Singular values of T in decreasing order.
struct SingularTriple {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
};

SingularTriple singular_values(const Mat3 &t);

/// alpha^T T beta, the two-party correlator <(alpha.sigma) (x) (beta.sigma)>.
inline double correlator(const Mat3 &t, const Vec3 &alpha, const Vec3 &beta) { return alpha.dot(t * beta); }

double chsh_value(const RMatrix &r, const Measurement &a1, const Measurement &a2, const Measurement &b1,
                  const Measurement &b2);

struct ChshMax {
    double value;
    SingularTriple s;
};

/// sqrt(s1^2 + s2^2).
ChshMax chsh_max(const RMatrix &r);

/// Bob measures sigma_1, sigma_2, sigma_3; Alice measures a1, a2, a3.
double f3_value(const RMatrix &r, const Measurement &a1, const Measurement &a2, const Measurement &a3);

/// sqrt(s1^2 + s2^2 + s3^2).
double f3_max(const RMatrix &r);

struct PptResult {
    bool entangled;
    double min_eigenvalue;
};

/// Partial transpose on B; for two qubits a negative eigenvalue is necessary
/// and sufficient for entanglement.
PptResult ppt_entangled(const DensityMatrix &rho);

/// Deterministic near-uniform points on the unit sphere.
std::vector<Vec3> fibonacci_sphere(int count);

/// Searches the four measurement directions directly: Fibonacci-sphere
/// seeding over Alice's pair, Nelder-Mead over all eight spherical angles,
/// then alternating exact best responses. Never uses the SVD of T.
double brute_force_chsh(const RMatrix &r, int grid_density = 24, int refine_iters = 200);

/// Searches Bob's orthonormal measurement triad (grid over Euler angles,
/// then Nelder-Mead) with Alice's best response alpha_k = T b_k / |T b_k|,
/// polished by alternating best responses. With Bob held at the Pauli axes
/// the value would be (1/sqrt 3) sum_k |T e_k|, which can fall short of
/// f3_max.
double brute_force_f3(const RMatrix &r, int grid_density = 24, int refine_iters = 200);

}  // namespace hqc
