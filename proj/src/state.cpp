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

#include "hqc/state.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "hqc/error.hpp"

namespace hqc {

namespace {

std::array<CMat2, 4> make_paulis() {
    const cplx i(0.0, 1.0);
    std::array<CMat2, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
}

std::array<CMat4, 16> make_pauli_products() {
    std::array<CMat4, 16> out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out[4 * i + j] = kron(pauli(i), pauli(j));
        }
    }
    return out;
}

std::string describe(const char *what, double value) {
    std::ostringstream os;
    os.precision(17);
    os << what << " " << value;
    return os.str();
}

}  // namespace

const CMat2 &pauli(int i) {
    static const std::array<CMat2, 4> sigma = make_paulis();
    return sigma.at(static_cast<std::size_t>(i));
}

const CMat4 &pauli_product(int i, int j) {
    static const std::array<CMat4, 16> products = make_pauli_products();
    return products.at(static_cast<std::size_t>(4 * i + j));
}

CMat4 kron(const CMat2 &left, const CMat2 &right) {
    CMat4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = left(i, j) * right;
        }
    }
    return out;
}

DensityMatrix DensityMatrix::validate(const CMat4 &m, double tol) {
    if (!(tol > 0.0)) {
        throw Error(ErrorKind::DomainError, "validation tolerance must be positive");
    }
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= tol)) {
        throw Error(ErrorKind::NotHermitian, describe("max |rho - rho^dag| =", herm), herm);
    }
    const double trace_dev = std::abs(m.trace() - cplx(1.0, 0.0));
    if (!(trace_dev <= tol)) {
        throw Error(ErrorKind::TraceNotOne, describe("|Tr rho - 1| =", trace_dev), trace_dev);
    }
    const CMat4 h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat4> es(h, Eigen::EigenvaluesOnly);
    const double min_ev = es.eigenvalues().minCoeff();
    if (!(min_ev >= -tol)) {
        throw Error(ErrorKind::NotPositive, describe("min eigenvalue =", min_ev), min_ev);
    }
    return DensityMatrix(m);
}

RMatrix::RMatrix() : r_(Mat4::Zero()) { r_(0, 0) = 1.0; }

RMatrix::RMatrix(const Mat4 &r) : r_(r) {
    if (!(std::abs(r(0, 0) - 1.0) <= 1e-10)) {
        throw Error(ErrorKind::DomainError, describe("R(0,0) must be 1, got", r(0, 0)));
    }
}

RMatrix RMatrix::from_parts(const Vec3 &a, const Vec3 &b, const Mat3 &t) {
    Mat4 r;
    r(0, 0) = 1.0;
    r.block<1, 3>(0, 1) = b.transpose();
    r.block<3, 1>(1, 0) = a;
    r.block<3, 3>(1, 1) = t;
    return RMatrix(r);
}

RMatrix RMatrix::swapped() const { return RMatrix(Mat4(r_.transpose())); }

namespace detail {

Mat4 raw_r_picture(const CMat4 &m) {
    Mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r(i, j) = pauli_product(i, j).transpose().cwiseProduct(m).sum().real();
        }
    }
    return r;
}

}  // namespace detail

RMatrix to_r_picture(const DensityMatrix &rho) {
    Mat4 r = detail::raw_r_picture(rho.matrix());
    r(0, 0) = 1.0;
    return RMatrix(r);
}

DensityMatrix from_r_picture(const RMatrix &r, double tol) {
    CMat4 m = CMat4::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m += (0.25 * r(i, j)) * pauli_product(i, j);
        }
    }
    return DensityMatrix::validate(m, tol);
}

CMat2 reduced_a(const CMat4 &rho) {
    CMat2 out = CMat2::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                out(i, j) += rho(2 * i + k, 2 * j + k);
            }
        }
    }
    return out;
}

CMat2 reduced_b(const CMat4 &rho) {
    CMat2 out = CMat2::Zero();
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            for (int i = 0; i < 2; ++i) {
                out(k, l) += rho(2 * i + k, 2 * i + l);
            }
        }
    }
    return out;
}

Vec3 bloch_vector(const CMat2 &m) {
    Vec3 v;
    for (int i = 1; i <= 3; ++i) {
        v(i - 1) = (pauli(i) * m).trace().real();
    }
    return v;
}

Mat3 bloch_rotation(const CMat2 &u) {
    Mat3 rot;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            rot(i - 1, j - 1) = 0.5 * (pauli(i) * u * pauli(j) * u.adjoint()).trace().real();
        }
    }
    return rot;
}

CMat4 partial_transpose_b(const CMat4 &rho) {
    CMat4 out;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            for (int j = 0; j < 2; ++j) {
                for (int l = 0; l < 2; ++l) {
                    out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
                }
            }
        }
    }
    return out;
}

CMat4 swap_qubits(const CMat4 &rho) {
    constexpr std::array<int, 4> perm = {0, 2, 1, 3};
    CMat4 out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out(i, j) = rho(perm[i], perm[j]);
        }
    }
    return out;
}

SteeredState steered_bloch(const RMatrix &r, const Vec3 &gamma) {
    if (!(gamma.norm() <= 1.0 + 1e-10)) {
        throw Error(ErrorKind::DomainError, describe("|gamma| must be <= 1, got", gamma.norm()));
    }
    const double p = 0.5 * (1.0 + r.a().dot(gamma));
    if (!(p > 1e-12)) {
        throw Error(ErrorKind::ZeroProbability, describe("steering outcome probability", p), p);
    }
    return SteeredState{(r.b() + r.t().transpose() * gamma) / (2.0 * p), p};
}

}  // namespace hqc
