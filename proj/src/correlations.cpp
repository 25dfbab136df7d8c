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

#include "hqc/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "hqc/error.hpp"
#include "hqc/nelder_mead.hpp"

namespace hqc {

namespace {

Vec3 unit_from_angles(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

void angles_of(const Vec3 &v, double &theta, double &phi) {
    theta = std::acos(std::clamp(v.z(), -1.0, 1.0));
    phi = std::atan2(v.y(), v.x());
}

// Normalised v, or `fallback` when v vanishes.
Vec3 direction_or(const Vec3 &v, const Vec3 &fallback) {
    const double n = v.norm();
    return n > 1e-300 ? Vec3(v / n) : fallback;
}

double chsh_of(const Mat3 &t, const Vec3 &a1, const Vec3 &a2, const Vec3 &b1, const Vec3 &b2) {
    return 0.5 * (correlator(t, a1, b1) + correlator(t, a1, b2) + correlator(t, a2, b1) - correlator(t, a2, b2));
}

}  // namespace

Measurement::Measurement(const Vec3 &direction) : dir_(direction) {
    if (!(std::abs(direction.norm() - 1.0) <= 1e-10)) {
        throw Error(ErrorKind::DomainError, "measurement direction must be a unit vector");
    }
}

Measurement Measurement::along(const Vec3 &v) {
    if (!(v.norm() > 0.0)) {
        throw Error(ErrorKind::DomainError, "measurement direction must be nonzero");
    }
    return Measurement(v.normalized());
}

SingularTriple singular_values(const Mat3 &t) {
    Eigen::JacobiSVD<Mat3> svd(t);
    const Vec3 s = svd.singularValues();
    return {s(0), s(1), s(2)};
}

double chsh_value(const RMatrix &r, const Measurement &a1, const Measurement &a2, const Measurement &b1,
                  const Measurement &b2) {
    return chsh_of(r.t(), a1.direction(), a2.direction(), b1.direction(), b2.direction());
}

ChshMax chsh_max(const RMatrix &r) {
    const SingularTriple s = singular_values(r.t());
    return {std::sqrt(s.s1 * s.s1 + s.s2 * s.s2), s};
}

double f3_value(const RMatrix &r, const Measurement &a1, const Measurement &a2, const Measurement &a3) {
    const Mat3 t = r.t();
    const std::array<const Vec3 *, 3> alphas = {&a1.direction(), &a2.direction(), &a3.direction()};
    double sum = 0.0;
    for (int k = 0; k < 3; ++k) {
        sum += correlator(t, *alphas[k], Vec3::Unit(k));
    }
    return sum / std::sqrt(3.0);
}

double f3_max(const RMatrix &r) {
    const SingularTriple s = singular_values(r.t());
    return std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3);
}

PptResult ppt_entangled(const DensityMatrix &rho) {
    CMat4 pt = partial_transpose_b(rho.matrix());
    pt = (0.5 * (pt + pt.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<CMat4> es(pt, Eigen::EigenvaluesOnly);
    const double min_ev = es.eigenvalues().minCoeff();
    return {min_ev < -1e-10, min_ev};
}

std::vector<Vec3> fibonacci_sphere(int count) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(std::max(count, 0)));
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        pts.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
    }
    return pts;
}

double brute_force_chsh(const RMatrix &r, int grid_density, int refine_iters) {
    if (grid_density < 8) {
        throw Error(ErrorKind::DomainError, "grid_density must be >= 8");
    }
    const Mat3 t = r.t();
    const Mat3 tt = t.transpose();
    const auto grid = fibonacci_sphere(std::max(8, grid_density * grid_density / 2));

    // Seeding: Alice's pair on the grid, Bob's directions as best responses.
    struct Seed {
        double value;
        std::size_t i, j;
    };
    constexpr std::size_t kSeeds = 4;
    std::vector<Seed> seeds;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double v = 0.5 * ((tt * (grid[i] + grid[j])).norm() + (tt * (grid[i] - grid[j])).norm());
            if (seeds.size() < kSeeds || v > seeds.back().value) {
                seeds.push_back({v, i, j});
                std::stable_sort(seeds.begin(), seeds.end(), [](const Seed &x, const Seed &y) { return x.value > y.value; });
                if (seeds.size() > kSeeds) {
                    seeds.pop_back();
                }
            }
        }
    }

    const Vec3 ex = Vec3::UnitX();
    const Vec3 ez = Vec3::UnitZ();
    double best = -std::numeric_limits<double>::infinity();
    for (const auto &seed : seeds) {
        Vec3 a1 = grid[seed.i];
        Vec3 a2 = grid[seed.j];
        Vec3 b1 = direction_or(tt * (a1 + a2), ex);
        Vec3 b2 = direction_or(tt * (a1 - a2), ez);

        std::vector<double> x0(8);
        angles_of(a1, x0[0], x0[1]);
        angles_of(a2, x0[2], x0[3]);
        angles_of(b1, x0[4], x0[5]);
        angles_of(b2, x0[6], x0[7]);
        auto objective = [&](const std::vector<double> &x) {
            return chsh_of(t, unit_from_angles(x[0], x[1]), unit_from_angles(x[2], x[3]), unit_from_angles(x[4], x[5]),
                           unit_from_angles(x[6], x[7]));
        };
        NelderMeadOptions opt;
        opt.max_iters = 4 * refine_iters;
        opt.tol = 1e-14;
        opt.initial_step = 0.1;
        const auto nm = nelder_mead_maximize(objective, x0, opt);
        a1 = unit_from_angles(nm.x[0], nm.x[1]);
        a2 = unit_from_angles(nm.x[2], nm.x[3]);
        b1 = unit_from_angles(nm.x[4], nm.x[5]);
        b2 = unit_from_angles(nm.x[6], nm.x[7]);

        // Alternating exact best responses; each half-step cannot decrease
        // the value.
        for (int it = 0; it < refine_iters; ++it) {
            b1 = direction_or(tt * (a1 + a2), b1);
            b2 = direction_or(tt * (a1 - a2), b2);
            a1 = direction_or(t * (b1 + b2), a1);
            a2 = direction_or(t * (b1 - b2), a2);
        }
        best = std::max(best, chsh_of(t, a1, a2, b1, b2));
    }
    return best;
}

double brute_force_f3(const RMatrix &r, int grid_density, int refine_iters) {
    if (grid_density < 8) {
        throw Error(ErrorKind::DomainError, "grid_density must be >= 8");
    }
    const Mat3 t = r.t();
    // Bob's triad is the columns of a rotation; Alice answers each axis with
    // alpha_k = T b_k / |T b_k|.
    auto rotation = [](double x0, double x1, double x2) {
        return Mat3(Eigen::AngleAxisd(x0, Vec3::UnitZ()) * Eigen::AngleAxisd(x1, Vec3::UnitY()) *
                    Eigen::AngleAxisd(x2, Vec3::UnitZ()));
    };
    auto value = [&](const Mat3 &bob) {
        double sum = 0.0;
        for (int k = 0; k < 3; ++k) {
            sum += (t * bob.col(k)).norm();
        }
        return sum / std::sqrt(3.0);
    };

    struct Seed {
        double value;
        std::array<double, 3> x;
    };
    constexpr std::size_t kSeeds = 4;
    const int n = std::max(4, grid_density / 2);
    const double step = 2.0 * std::numbers::pi / n;
    std::vector<Seed> seeds;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= n / 2; ++j) {
            for (int k = 0; k < n; ++k) {
                const std::array<double, 3> x{i * step, j * step, k * step};
                const double v = value(rotation(x[0], x[1], x[2]));
                if (seeds.size() < kSeeds || v > seeds.back().value) {
                    seeds.push_back({v, x});
                    std::stable_sort(seeds.begin(), seeds.end(),
                                     [](const Seed &a, const Seed &b) { return a.value > b.value; });
                    if (seeds.size() > kSeeds) {
                        seeds.pop_back();
                    }
                }
            }
        }
    }

    double best = -std::numeric_limits<double>::infinity();
    for (const auto &seed : seeds) {
        NelderMeadOptions opt;
        opt.max_iters = 4 * refine_iters;
        opt.tol = 1e-14;
        opt.initial_step = 0.1;
        const auto nm = nelder_mead_maximize(
            [&](const std::vector<double> &x) { return value(rotation(x[0], x[1], x[2])); },
            std::vector<double>(seed.x.begin(), seed.x.end()), opt);
        Mat3 bob = rotation(nm.x[0], nm.x[1], nm.x[2]);

        // Alternating best responses: Alice per axis, then Bob's triad as the
        // orthogonal polar factor of T^T [alpha_1 alpha_2 alpha_3].
        Mat3 alice;
        for (int it = 0; it < refine_iters; ++it) {
            for (int k = 0; k < 3; ++k) {
                alice.col(k) = direction_or(t * bob.col(k), bob.col(k));
            }
            const Eigen::JacobiSVD<Mat3> svd(t.transpose() * alice, Eigen::ComputeFullU | Eigen::ComputeFullV);
            bob = svd.matrixU() * svd.matrixV().transpose();
        }
        for (int k = 0; k < 3; ++k) {
            alice.col(k) = direction_or(t * bob.col(k), bob.col(k));
        }
        double v = 0.0;
        for (int k = 0; k < 3; ++k) {
            v += correlator(t, alice.col(k), bob.col(k));
        }
        best = std::max({best, v / std::sqrt(3.0), value(rotation(nm.x[0], nm.x[1], nm.x[2]))});
    }
    return best;
}

}  // namespace hqc
