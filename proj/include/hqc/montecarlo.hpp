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

// Random-state sweeps testing the ellipsoid-centre bounds on CHSH and F3
// violation. Any state that breaks a bound is kept, in full, as a finding.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hqc/criteria.hpp"

namespace hqc {

struct SweepConfig {
    std::uint64_t n = 1'000'000;
    std::uint64_t seed = 0;
    /// Relative weights of Ginibre ranks 1..4. Pure states are off by
    /// default.
    std::array<double, 4> rank_weights{0.0, 1.0, 1.0, 1.0};
    int bins = 200;
    unsigned workers = 1;
    Thresholds thresholds;
    double violation_tol = 1e-9;
};

/// Samples are split into fixed blocks of this size; block k always draws
/// from stream k of the seed, whatever the number of workers.
inline constexpr std::uint64_t kSamplesPerStream = 4096;

struct BinStats {
    double max_b = 0.0;
    double max_f3 = 0.0;
    std::uint64_t count = 0;
};

struct Violation {
    std::uint64_t index;
    DensityMatrix state;
    double b, f3, c_a, c_b;
    /// e.g. "chsh_bound(c_B)", "chsh_threshold(c_A)", "f3_threshold(c_B)".
    std::string reason;
};

struct SweepSummary {
    SweepConfig config;
    std::uint64_t samples = 0;
    /// Samples with a pure marginal (point ellipsoid); not binned or checked.
    std::uint64_t degenerate = 0;
    std::vector<BinStats> bins_by_c_b;
    std::vector<BinStats> bins_by_c_a;
    std::vector<Violation> violations;
    double runtime_seconds = 0.0;
};

/// Names of the bounds that (b, f3) breaks at centre magnitude c:
///   chsh_bound      b  > max{sqrt(2(1 - c)), 1} + tol
///   chsh_threshold  b  > 1 + tol and c > c_chsh
///   f3_threshold    f3 > 1 + tol and c > c_f3
std::vector<std::string> bound_violations(double b, double f3, double c, const Thresholds &th, double tol);

SweepSummary run_sweep(const SweepConfig &config);

struct EnvelopeRow {
    double c_mid;
    double max_b;
    double max_f3;
    std::uint64_t count;
};

/// Non-empty bins only, in increasing c.
std::vector<EnvelopeRow> bin_envelope(const SweepSummary &summary, Party centre_party = Party::B);

/// c_mid,max_B,max_F3,count
std::string envelope_to_csv(const std::vector<EnvelopeRow> &rows);

/// Rows whose max_B exceeds the CHSH bound at the bin's lower edge by more
/// than `tol`.
std::vector<EnvelopeRow> envelope_bound_excess(const std::vector<EnvelopeRow> &rows, int bins, double tol = 1e-6);

}  // namespace hqc
