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

// Fixtures shared by the test binaries.

#include <cmath>
#include <numbers>

#include "hqc/filtering.hpp"
#include "hqc/random.hpp"
#include "hqc/state.hpp"

namespace hqc::testing {

inline const double kSqrt2 = std::numbers::sqrt2;
inline const double kSqrt3 = std::numbers::sqrt3;

inline CMat4 projector(const Eigen::Vector4cd &psi) { return psi * psi.adjoint(); }

inline DensityMatrix singlet() {
    Eigen::Vector4cd psi(0.0, 1.0, -1.0, 0.0);
    return DensityMatrix::validate(projector(psi / std::sqrt(2.0)));
}

inline DensityMatrix basis_state(int k) {
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(k) = 1.0;
    return DensityMatrix::validate(projector(psi));
}

inline DensityMatrix maximally_mixed() { return DensityMatrix::validate(CMat4::Identity() / 4.0); }

/// w |psi-><psi-| + (1 - w) 1/4.
inline DensityMatrix werner(double w) {
    return DensityMatrix::validate(w * singlet().matrix() + (1.0 - w) * CMat4::Identity() / 4.0);
}

/// Full-rank Ginibre state.
inline DensityMatrix random_full_rank(SeededRng &rng) { return sample_state(rng, 4); }

/// Invertible, normalised random filter; redraws the rare near-singular
/// sample.
inline LocalFilter random_filter(SeededRng &rng) {
    for (;;) {
        const CMat2 m = random_matrix2(rng);
        const Eigen::JacobiSVD<CMat2> svd(m);
        const Eigen::Vector2d s = svd.singularValues();
        if (s(1) / s(0) > 1e-2) {
            return LocalFilter::normalized(m);
        }
    }
}

inline double max_abs(const CMat4 &m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace hqc::testing
