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

#include "hqc/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "hqc/correlations.hpp"
#include "hqc/error.hpp"
#include "hqc/io.hpp"
#include "hqc/parallel.hpp"
#include "hqc/random.hpp"

namespace hqc {

namespace {

struct Partial {
    std::uint64_t samples = 0;
    std::uint64_t degenerate = 0;
    std::vector<BinStats> by_c_b;
    std::vector<BinStats> by_c_a;
    std::vector<Violation> violations;
};

std::size_t bin_of(double c, int bins) {
    const auto k = static_cast<long>(std::floor(std::clamp(c, 0.0, 1.0) * bins));
    return static_cast<std::size_t>(std::clamp<long>(k, 0, bins - 1));
}

void record(std::vector<BinStats> &bins, double c, double b, double f3) {
    auto &s = bins[bin_of(c, static_cast<int>(bins.size()))];
    s.max_b = std::max(s.max_b, b);
    s.max_f3 = std::max(s.max_f3, f3);
    ++s.count;
}

void check_config(const SweepConfig &config) {
    if (config.bins < 1) {
        throw Error(ErrorKind::DomainError, "bins must be >= 1");
    }
    double total = 0.0;
    for (double w : config.rank_weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw Error(ErrorKind::DomainError, "rank weights must be finite and non-negative");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw Error(ErrorKind::DomainError, "at least one rank weight must be positive");
    }
    config.thresholds.check();
}

}  // namespace

std::vector<std::string> bound_violations(double b, double f3, double c, const Thresholds &th, double tol) {
    std::vector<std::string> out;
    if (b > conjecture_bound_chsh(std::clamp(c, 0.0, 1.0)) + tol) {
        out.emplace_back("chsh_bound");
    }
    if (b > 1.0 + tol && c > th.c_chsh) {
        out.emplace_back("chsh_threshold");
    }
    if (f3 > 1.0 + tol && c > th.c_f3) {
        out.emplace_back("f3_threshold");
    }
    return out;
}

SweepSummary run_sweep(const SweepConfig &config) {
    check_config(config);
    const auto started = std::chrono::steady_clock::now();
    const std::uint64_t streams = (config.n + kSamplesPerStream - 1) / kSamplesPerStream;
    const auto bins = static_cast<std::size_t>(config.bins);

    std::vector<Partial> partials(static_cast<std::size_t>(streams));
    parallel_for(partials.size(), config.workers, [&](std::size_t k) {
        Partial part;
        part.by_c_b.assign(bins, {});
        part.by_c_a.assign(bins, {});
        SeededRng rng(config.seed, k);
        std::discrete_distribution<int> rank_dist(config.rank_weights.begin(), config.rank_weights.end());
        const std::uint64_t first = k * kSamplesPerStream;
        const std::uint64_t last = std::min(config.n, first + kSamplesPerStream);
        for (std::uint64_t index = first; index < last; ++index) {
            const int rank = rank_dist(rng.engine()) + 1;
            const DensityMatrix rho = sample_state(rng, rank);
            const RMatrix r = to_r_picture(rho);
            ++part.samples;
            const SteeringEllipsoid ea = compute_ellipsoid(r, Party::A);
            const SteeringEllipsoid eb = compute_ellipsoid(r, Party::B);
            if (ea.degenerate || eb.degenerate) {
                ++part.degenerate;
                continue;
            }
            const SingularTriple s = singular_values(r.t());
            const double b = std::sqrt(s.s1 * s.s1 + s.s2 * s.s2);
            const double f3 = std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3);
            const double c_a = centre_magnitude(ea);
            const double c_b = centre_magnitude(eb);
            record(part.by_c_b, c_b, b, f3);
            record(part.by_c_a, c_a, b, f3);

            std::string reason;
            for (const auto &[c, label] : {std::pair{c_b, "c_B"}, std::pair{c_a, "c_A"}}) {
                for (const auto &v : bound_violations(b, f3, c, config.thresholds, config.violation_tol)) {
                    reason += (reason.empty() ? "" : ";") + v + "(" + label + ")";
                }
            }
            if (!reason.empty()) {
                part.violations.push_back(Violation{index, rho, b, f3, c_a, c_b, reason});
            }
        }
        partials[k] = std::move(part);
    });

    SweepSummary out;
    out.config = config;
    out.bins_by_c_b.assign(bins, {});
    out.bins_by_c_a.assign(bins, {});
    for (auto &part : partials) {
        out.samples += part.samples;
        out.degenerate += part.degenerate;
        for (std::size_t i = 0; i < bins; ++i) {
            for (auto [dst, src] : {std::pair{&out.bins_by_c_b[i], &part.by_c_b[i]},
                                    std::pair{&out.bins_by_c_a[i], &part.by_c_a[i]}}) {
                dst->max_b = std::max(dst->max_b, src->max_b);
                dst->max_f3 = std::max(dst->max_f3, src->max_f3);
                dst->count += src->count;
            }
        }
        std::move(part.violations.begin(), part.violations.end(), std::back_inserter(out.violations));
    }
    out.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

std::vector<EnvelopeRow> bin_envelope(const SweepSummary &summary, Party centre_party) {
    const auto &bins = centre_party == Party::B ? summary.bins_by_c_b : summary.bins_by_c_a;
    std::vector<EnvelopeRow> rows;
    const double width = bins.empty() ? 0.0 : 1.0 / static_cast<double>(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) {
        if (bins[i].count == 0) {
            continue;
        }
        rows.push_back({(static_cast<double>(i) + 0.5) * width, bins[i].max_b, bins[i].max_f3, bins[i].count});
    }
    return rows;
}

std::string envelope_to_csv(const std::vector<EnvelopeRow> &rows) {
    std::ostringstream os;
    os << "c_mid,max_B,max_F3,count\n";
    for (const auto &row : rows) {
        os << format_double(row.c_mid) << ',' << format_double(row.max_b) << ',' << format_double(row.max_f3) << ','
           << row.count << '\n';
    }
    return os.str();
}

std::vector<EnvelopeRow> envelope_bound_excess(const std::vector<EnvelopeRow> &rows, int bins, double tol) {
    std::vector<EnvelopeRow> out;
    const double half = 0.5 / bins;
    for (const auto &row : rows) {
        const double lower = std::clamp(row.c_mid - half, 0.0, 1.0);
        if (row.max_b > conjecture_bound_chsh(lower) + tol) {
            out.push_back(row);
        }
    }
    return out;
}

}  // namespace hqc
