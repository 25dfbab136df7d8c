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

#include "hqc/families.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hqc/error.hpp"
#include "hqc/io.hpp"
#include "hqc/parallel.hpp"

namespace hqc {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kRangeSlack = 1e-12;

void check_params(const FamilyParams &params) {
    if (!(params.theta >= -kRangeSlack && params.theta <= kQuarterPi + kRangeSlack)) {
        throw Error(ErrorKind::DomainError, "theta must lie in [0, pi/4]");
    }
    if (!(params.p >= 0.0 && params.p <= 1.0)) {
        throw Error(ErrorKind::DomainError, "p must lie in [0, 1]");
    }
}

CMat4 phi_plus(double theta) {
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(0) = std::cos(theta);
    psi(3) = std::sin(theta);
    return psi * psi.adjoint();
}

CMat2 marginal(double theta) {
    CMat2 m = CMat2::Zero();
    m(0, 0) = std::cos(theta) * std::cos(theta);
    m(1, 1) = std::sin(theta) * std::sin(theta);
    return m;
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::M:
            return "M";
        case Family::MM:
            return "MM";
        case Family::QD:
            return "QD";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "m") {
        return Family::M;
    }
    if (lower == "mm") {
        return Family::MM;
    }
    if (lower == "qd") {
        return Family::QD;
    }
    throw Error(ErrorKind::ParseError, "unknown family '" + std::string(name) + "' (expected m, mm or qd)");
}

DensityMatrix rho_m(const FamilyParams &params) {
    check_params(params);
    const CMat4 noise = kron(marginal(params.theta), 0.5 * CMat2::Identity());
    return DensityMatrix::validate(params.p * phi_plus(params.theta) + (1.0 - params.p) * noise);
}

DensityMatrix rho_mm(const FamilyParams &params) {
    check_params(params);
    // Both marginals of phi+(theta) equal diag(cos^2, sin^2).
    const CMat2 m = marginal(params.theta);
    return DensityMatrix::validate(params.p * phi_plus(params.theta) + (1.0 - params.p) * kron(m, m));
}

DensityMatrix rho_qd(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::DomainError, "p must lie in [0, 1]");
    }
    CMat4 m = CMat4::Zero();
    m(1, 1) = 0.5 * p;
    m(2, 2) = 0.5 * p;
    m(1, 2) = -0.5 * p;
    m(2, 1) = -0.5 * p;
    m(0, 0) = 1.0 - p;
    return DensityMatrix::validate(m);
}

DensityMatrix family_state(Family family, const FamilyParams &params) {
    switch (family) {
        case Family::M:
            return rho_m(params);
        case Family::MM:
            return rho_mm(params);
        case Family::QD:
            return rho_qd(params.p);
    }
    throw Error(ErrorKind::DomainError, "unknown family");
}

std::pair<LocalFilter, LocalFilter> paper_filter_rho_m(double theta) {
    if (!(theta > 0.0 && theta <= kQuarterPi + kRangeSlack)) {
        throw Error(ErrorKind::DomainError, "filter needs 0 < theta <= pi/4");
    }
    CMat2 fa = CMat2::Zero();
    fa(0, 0) = std::sin(theta) / std::cos(theta);
    fa(1, 1) = 1.0;
    return {LocalFilter::normalized(fa), LocalFilter::identity()};
}

std::vector<ScanRow> scan_family(Family family, const std::vector<double> &theta_grid, const std::vector<double> &p_grid,
                                 const Thresholds &th, unsigned workers) {
    th.check();
    if (p_grid.empty()) {
        throw Error(ErrorKind::DomainError, "p grid is empty");
    }
    std::vector<double> thetas = theta_grid;
    if (family == Family::QD) {
        thetas = {0.0};
    } else if (thetas.empty()) {
        throw Error(ErrorKind::DomainError, "theta grid is empty");
    }
    // Validate the whole grid before any work is scheduled.
    for (double theta : thetas) {
        for (double p : p_grid) {
            check_params({theta, p});
        }
    }

    std::vector<ScanRow> rows(thetas.size() * p_grid.size());
    parallel_for(rows.size(), workers, [&](std::size_t k) {
        const double theta = thetas[k / p_grid.size()];
        const double p = p_grid[k % p_grid.size()];
        const DensityMatrix rho = family_state(family, {theta, p});
        rows[k] = ScanRow{theta, p, classify(to_r_picture(rho), th)};
    });
    return rows;
}

std::string scan_to_csv(const std::vector<ScanRow> &rows) {
    std::ostringstream os;
    os << "theta,p,B,F3,HBstar,HF3star,cA,cB,entangled,flags\n";
    for (const auto &row : rows) {
        const auto &r = row.report;
        os << format_double(row.theta) << ',' << format_double(row.p) << ',' << format_double(r.b) << ','
           << format_double(r.f3) << ',' << format_double(r.hb_star) << ',' << format_double(r.hf3_star) << ','
           << format_double(r.c_a) << ',' << format_double(r.c_b) << ',' << (r.entangled ? 1 : 0) << ',';
        bool first = true;
        for (Flag f : r.flags) {
            os << (first ? "" : ";") << to_string(f);
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) {
        throw Error(ErrorKind::DomainError, "grid needs at least one point");
    }
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        out[static_cast<std::size_t>(k)] = count == 1 ? lo : lo + (hi - lo) * k / (count - 1);
    }
    if (count > 1) {
        out.back() = hi;
    }
    return out;
}

double qd_boundary_root(double threshold, double tol) {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw Error(ErrorKind::DomainError, "threshold must lie in (0, 1)");
    }
    auto excess = [&](double p) {
        return centre_magnitude(compute_ellipsoid(to_r_picture(rho_qd(p)), Party::B)) - threshold;
    };
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace hqc
