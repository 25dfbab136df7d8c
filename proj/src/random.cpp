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

#include "hqc/random.hpp"

#include <cmath>

#include "hqc/error.hpp"

namespace hqc {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
    return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                         0x68716375u};
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
    auto seq = make_seed_seq(seed, stream);
    engine_.seed(seq);
}

cplx SeededRng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}

DensityMatrix sample_state(SeededRng &rng, int rank) {
    if (rank < 1 || rank > 4) {
        throw Error(ErrorKind::DomainError, "rank must be in 1..4, got " + std::to_string(rank));
    }
    Eigen::Matrix<cplx, 4, Eigen::Dynamic> g(4, rank);
    for (int j = 0; j < rank; ++j) {
        for (int i = 0; i < 4; ++i) {
            g(i, j) = rng.complex_normal();
        }
    }
    CMat4 m = g * g.adjoint();
    m = (0.5 * (m + m.adjoint())).eval();
    m /= m.trace().real();
    return DensityMatrix::validate(m);
}

CMat2 random_matrix2(SeededRng &rng) {
    CMat2 g;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            g(i, j) = rng.complex_normal();
        }
    }
    return g;
}

CMat2 random_unitary(SeededRng &rng) {
    // QR of a Ginibre matrix with the phases of R's diagonal divided out.
    const CMat2 g = random_matrix2(rng);
    Eigen::HouseholderQR<CMat2> qr(g);
    CMat2 q = qr.householderQ();
    const CMat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < 2; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) {
            q.col(k) *= r(k, k) / mag;
        }
    }
    return q;
}

}  // namespace hqc
