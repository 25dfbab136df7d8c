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

#include "hqc/state.hpp"

namespace hqc {

inline constexpr double kDegeneracyTol = 1e-9;

/// The set of Bloch vectors one party can be steered to by the other's
/// measurements: { x : (x - centre)^T q^-1 (x - centre) <= 1 }.
///
/// `party` names whose states are steered. When the steering party's reduced
/// state is pure (1 - |bloch|^2 <= tol) the state is a product and the
/// ellipsoid collapses to the single point `centre` with q = 0 and
/// gamma_sq = +inf; `degenerate` records this.
struct SteeringEllipsoid {
    Party party = Party::B;
    Vec3 centre = Vec3::Zero();
    Mat3 q = Mat3::Zero();
    double gamma_sq = 1.0;
    Vec3 semiaxes = Vec3::Zero();  ///< decreasing
    bool degenerate = false;
};

SteeringEllipsoid compute_ellipsoid(const RMatrix &r, Party party, double tol = kDegeneracyTol);

inline double centre_magnitude(const SteeringEllipsoid &e) { return e.centre.norm(); }

/// (x - c)^T q^-1 (x - c) - 1. Throws DegenerateEllipsoid unless q is
/// invertible (min eigenvalue > 1e-10).
double surface_residual(const SteeringEllipsoid &e, const Vec3 &point);

}  // namespace hqc
