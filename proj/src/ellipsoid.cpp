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

#include "hqc/ellipsoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hqc/error.hpp"

namespace hqc {

SteeringEllipsoid compute_ellipsoid(const RMatrix &r, Party party, double tol) {
    if (!(tol > 0.0)) {
        throw Error(ErrorKind::DomainError, "degeneracy tolerance must be positive");
    }
    // Written for the steered party B; A is the same with a <-> b, T -> T^T.
    const RMatrix &oriented = party == Party::B ? r : r.swapped();
    const Vec3 a = oriented.a();
    const Vec3 b = oriented.b();
    const Mat3 t = oriented.t();

    SteeringEllipsoid e;
    e.party = party;
    const double mixedness = 1.0 - a.squaredNorm();
    if (mixedness <= tol) {
        e.degenerate = true;
        e.centre = b;
        e.gamma_sq = std::numeric_limits<double>::infinity();
        return e;
    }

    const double g2 = 1.0 / mixedness;
    e.gamma_sq = g2;
    e.centre = g2 * (b - t.transpose() * a);
    const Mat3 q = g2 * (t.transpose() - b * a.transpose()) * (Mat3::Identity() + g2 * a * a.transpose()) *
                   (t - a * b.transpose());
    e.q = 0.5 * (q + q.transpose());

    Eigen::SelfAdjointEigenSolver<Mat3> es(e.q, Eigen::EigenvaluesOnly);
    const Vec3 ev = es.eigenvalues();  // increasing
    for (int k = 0; k < 3; ++k) {
        e.semiaxes(k) = std::sqrt(std::max(0.0, ev(2 - k)));
    }
    return e;
}

double surface_residual(const SteeringEllipsoid &e, const Vec3 &point) {
    if (e.degenerate) {
        throw Error(ErrorKind::DegenerateEllipsoid, "point ellipsoid has no surface");
    }
    Eigen::SelfAdjointEigenSolver<Mat3> es(e.q);
    const Vec3 ev = es.eigenvalues();
    if (!(ev.minCoeff() > 1e-10)) {
        throw Error(ErrorKind::DegenerateEllipsoid, "ellipsoid matrix is not invertible", ev.minCoeff());
    }
    const Vec3 d = es.eigenvectors().transpose() * (point - e.centre);
    return d.cwiseProduct(d).cwiseQuotient(ev).sum() - 1.0;
}

}  // namespace hqc
