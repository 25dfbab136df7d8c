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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace hqc {

struct NelderMeadOptions {
    int max_iters = 500;
    /// Converged once the spread of objective values over the simplex drops
    /// to this absolute value.
    double tol = 1e-8;
    double initial_step = 0.25;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free maximisation of `f` over R^n (standard reflection,
/// expansion, contraction and shrink coefficients 1, 2, 1/2, 1/2).
template <class F>
NelderMeadResult nelder_mead_maximize(F &&f, const std::vector<double> &x0, const NelderMeadOptions &opt = {}) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> values(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        simplex[k + 1][k] += opt.initial_step;
    }
    for (std::size_t k = 0; k <= n; ++k) {
        values[k] = f(simplex[k]);
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    auto along = [&](double t, std::vector<double> &out) {
        const auto &worst = simplex[order[n]];
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = centroid[k] + t * (worst[k] - centroid[k]);
        }
    };

    NelderMeadResult res;
    int iter = 0;
    for (; iter < opt.max_iters; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
        if (values[order[0]] - values[order[n]] <= opt.tol) {
            res.converged = true;
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t k = 0; k < n; ++k) {
                centroid[k] += simplex[order[v]][k] / static_cast<double>(n);
            }
        }

        along(-1.0, trial);
        const double fr = f(trial);
        if (fr > values[order[0]]) {
            along(-2.0, trial2);
            const double fe = f(trial2);
            if (fe > fr) {
                simplex[order[n]] = trial2;
                values[order[n]] = fe;
            } else {
                simplex[order[n]] = trial;
                values[order[n]] = fr;
            }
            continue;
        }
        if (fr > values[order[n - 1]]) {
            simplex[order[n]] = trial;
            values[order[n]] = fr;
            continue;
        }
        // Outside contraction when the reflection beat the worst point,
        // inside contraction otherwise.
        const bool outside = fr > values[order[n]];
        along(outside ? -0.5 : 0.5, trial2);
        const double fc = f(trial2);
        if (fc > (outside ? fr : values[order[n]])) {
            simplex[order[n]] = trial2;
            values[order[n]] = fc;
            continue;
        }
        const auto best = simplex[order[0]];
        for (std::size_t v = 1; v <= n; ++v) {
            auto &pt = simplex[order[v]];
            for (std::size_t k = 0; k < n; ++k) {
                pt[k] = best[k] + 0.5 * (pt[k] - best[k]);
            }
            values[order[v]] = f(pt);
        }
    }

    const auto best = static_cast<std::size_t>(std::distance(values.begin(), std::max_element(values.begin(), values.end())));
    res.x = simplex[best];
    res.value = values[best];
    res.iterations = iter;
    return res;
}

}  // namespace hqc
