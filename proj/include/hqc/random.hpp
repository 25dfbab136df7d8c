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

#include <cstdint>
#include <random>

#include "hqc/state.hpp"

namespace hqc {

/// Deterministic random source. Distinct streams of the same seed are
/// independent engines, which is how parallel work is partitioned.
class SeededRng {
   public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    /// Standard complex Gaussian, E|z|^2 = 1.
    cplx complex_normal();

    std::mt19937_64 &engine() noexcept { return engine_; }

   private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// rho = G G^dag / Tr(G G^dag) with G a 4 x rank complex Ginibre matrix.
/// rank == 4 samples the Hilbert-Schmidt ensemble.
DensityMatrix sample_state(SeededRng &rng, int rank);

/// Haar-random single-qubit unitary.
CMat2 random_unitary(SeededRng &rng);

/// 2x2 complex Ginibre matrix (invertible with probability one).
CMat2 random_matrix2(SeededRng &rng);

}  // namespace hqc
