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

#include "hqc/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "hqc/correlations.hpp"
#include "hqc/error.hpp"
#include "hqc/nelder_mead.hpp"
#include "hqc/parallel.hpp"
#include "hqc/random.hpp"

namespace hqc {

namespace {

const Mat4 &eta() {
    static const Mat4 e = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
    return e;
}

CMat4 filter_operator(const CMat2 &f, Party party) {
    return party == Party::A ? kron(f, CMat2::Identity()) : kron(CMat2::Identity(), f);
}

// Filter diag(d, 1) V with d = floor^(sin^2 x0) and V = Rz(x1) Ry(x2) Rz(x3).
CMat2 filter_from_params(const std::vector<double> &x) {
    const double s = std::sin(x[0]);
    const double d = std::exp(std::log(kFilterFloor) * s * s);
    const cplx i(0.0, 1.0);
    const double c = std::cos(0.5 * x[2]);
    const double sn = std::sin(0.5 * x[2]);
    CMat2 v;
    v << std::exp(-0.5 * i * (x[1] + x[3])) * c, -std::exp(-0.5 * i * (x[1] - x[3])) * sn,
        std::exp(0.5 * i * (x[1] - x[3])) * sn, std::exp(0.5 * i * (x[1] + x[3])) * c;
    v.row(0) *= d;
    return v;
}

}  // namespace

LocalFilter LocalFilter::normalized(const CMat2 &m) {
    Eigen::JacobiSVD<CMat2> svd(m);
    const double smax = svd.singularValues()(0);
    if (!(smax > 0.0) || !std::isfinite(smax)) {
        throw Error(ErrorKind::SingularFilter, "filter is zero or not finite");
    }
    const CMat2 f = std::abs(smax - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon() ? m : CMat2(m / smax);
    const double det = std::abs(f.determinant());
    if (!(det > 1e-12)) {
        throw Error(ErrorKind::SingularFilter, "filter is not invertible (|det| <= 1e-12)", det);
    }
    return LocalFilter(f);
}

LocalFilter LocalFilter::identity() { return LocalFilter(CMat2::Identity()); }

FilteredState apply_filters(const DensityMatrix &rho, const LocalFilter &fa, const LocalFilter &fb) {
    const CMat4 k = kron(fa.matrix(), fb.matrix());
    CMat4 m = k * rho.matrix() * k.adjoint();
    const double p = m.trace().real();
    if (!(p > 1e-12)) {
        throw Error(ErrorKind::ZeroSuccessProbability, "filter success probability <= 1e-12", p);
    }
    m = (0.5 * (m + m.adjoint()) / p).eval();
    return {DensityMatrix::validate(m), p};
}

FilteredState apply_one_sided(const DensityMatrix &rho, const LocalFilter &f, Party party) {
    return party == Party::A ? apply_filters(rho, f, LocalFilter::identity())
                             : apply_filters(rho, LocalFilter::identity(), f);
}

NormalFormSpectrum normal_form_spectrum(const RMatrix &r) {
    const Mat4 &e = eta();
    const Mat4 m = e * r.matrix() * e * r.matrix().transpose();
    Eigen::EigenSolver<Mat4> es(m, false);
    const Eigen::Vector4cd ev = es.eigenvalues();

    // A state with a non-diagonalisable eta R eta R^T (e.g. the
    // quasi-distillable family) has eigenvalues that split by
    // O(sqrt(eps) |M|) under roundoff in R, into either a real pair or a
    // complex-conjugate pair. Splits at that scale are treated as one
    // eigenvalue of multiplicity > 1.
    const double noise = 64.0 * std::sqrt(std::numeric_limits<double>::epsilon()) * m.norm();
    const double imag_tol = std::max(1e-8, noise);
    std::array<double, 4> re{};
    for (int k = 0; k < 4; ++k) {
        if (std::abs(ev(k).imag()) > imag_tol) {
            throw Error(ErrorKind::ComplexSpectrum, "eta R eta R^T has a complex eigenvalue", ev(k).imag());
        }
        re[static_cast<std::size_t>(k)] = ev(k).real();
    }
    std::sort(re.begin(), re.end(), std::greater<>());

    NormalFormSpectrum out;
    std::size_t start = 0;
    while (start < 4) {
        std::size_t end = start + 1;
        while (end < 4 && re[end - 1] - re[end] <= noise) {
            ++end;
        }
        double mean = 0.0;
        for (std::size_t k = start; k < end; ++k) {
            mean += re[k];
        }
        mean /= static_cast<double>(end - start);
        for (std::size_t k = start; k < end; ++k) {
            out.nu[k] = mean;
        }
        start = end;
    }
    for (double &nu : out.nu) {
        if (nu < 0.0 && nu > -std::max(1e-8, noise)) {
            nu = 0.0;
        }
    }
    return out;
}

namespace {

std::array<double, 3> normalised_ratios(const RMatrix &r) {
    const auto nu = normal_form_spectrum(r).nu;
    if (!(nu[0] > 1e-12)) {
        throw Error(ErrorKind::DegenerateNormalForm, "largest normal-form eigenvalue <= 1e-12", nu[0]);
    }
    return {std::max(0.0, nu[1] / nu[0]), std::max(0.0, nu[2] / nu[0]), std::max(0.0, nu[3] / nu[0])};
}

}  // namespace

RMatrix normal_form_r(const RMatrix &r) {
    const auto q = normalised_ratios(r);
    Mat4 out = Mat4::Zero();
    out(0, 0) = 1.0;
    for (int k = 0; k < 3; ++k) {
        out(k + 1, k + 1) = -std::sqrt(q[static_cast<std::size_t>(k)]);
    }
    return RMatrix(out);
}

double hidden_chsh(const RMatrix &r) {
    const auto q = normalised_ratios(r);
    return std::sqrt(q[0] + q[1]);
}

double hidden_f3(const RMatrix &r) {
    const auto q = normalised_ratios(r);
    return std::sqrt(q[0] + q[1] + q[2]);
}

OneSidedResult optimize_one_sided(const DensityMatrix &rho, Party party, Objective objective,
                                  const OneSidedOptions &options) {
    if (options.starts < 1) {
        throw Error(ErrorKind::DomainError, "optimize_one_sided needs at least one start");
    }
    const CMat4 &state = rho.matrix();
    auto score = [&](const std::vector<double> &x) {
        const CMat4 k = filter_operator(filter_from_params(x), party);
        const Mat4 raw = detail::raw_r_picture(k * state * k.adjoint());
        if (!(raw(0, 0) > 1e-300)) {
            return 0.0;
        }
        const Mat3 t = raw.block<3, 3>(1, 1) / raw(0, 0);
        const SingularTriple s = singular_values(t);
        return objective == Objective::Chsh ? std::sqrt(s.s1 * s.s1 + s.s2 * s.s2)
                                            : std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3);
    };

    NelderMeadOptions nm_opt;
    nm_opt.max_iters = options.max_iters;
    nm_opt.tol = options.tol;
    nm_opt.initial_step = 0.4;

    std::vector<NelderMeadResult> results(static_cast<std::size_t>(options.starts));
    parallel_for(results.size(), options.workers, [&](std::size_t k) {
        std::vector<double> x0(4, 0.0);
        if (k > 0) {
            SeededRng rng(options.seed, k);
            x0[0] = 0.5 * std::numbers::pi * rng.uniform();
            x0[1] = 2.0 * std::numbers::pi * rng.uniform();
            x0[2] = std::acos(1.0 - 2.0 * rng.uniform());
            x0[3] = 2.0 * std::numbers::pi * rng.uniform();
        }
        auto first = nelder_mead_maximize(score, x0, nm_opt);
        // Restart from the optimum with a fresh, smaller simplex.
        NelderMeadOptions polish = nm_opt;
        polish.initial_step = 0.05;
        auto second = nelder_mead_maximize(score, first.x, polish);
        results[k] = second.value >= first.value ? second : first;
    });

    std::size_t best = 0;
    for (std::size_t k = 1; k < results.size(); ++k) {
        if (results[k].value > results[best].value) {
            best = k;
        }
    }
    const auto &winner = results[best];
    const double s = std::sin(winner.x[0]);
    return OneSidedResult{winner.value,
                          LocalFilter::normalized(filter_from_params(winner.x)),
                          objective,
                          party,
                          winner.converged,
                          options.starts,
                          s * s >= 1.0 - 1e-6};
}

}  // namespace hqc
