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

// Three one- and two-parameter state families that exhibit one-sided and
// two-sided inaccessible hidden correlations, plus grid scans over them.
//
//   M   p phi+(theta) + (1 - p) rho_A(theta) (x) 1/2     asymmetric noise
//   MM  p phi+(theta) + (1 - p) rho_A(theta) (x) rho_B(theta)
//   QD  p |Psi-><Psi-| + (1 - p) |00><00|                quasi-distillable
//
// with |phi+(theta)> = cos(theta)|00> + sin(theta)|11>, theta in [0, pi/4],
// p in [0, 1].

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hqc/criteria.hpp"

namespace hqc {

enum class Family { M, MM, QD };

std::string_view to_string(Family f);
/// Accepts "m", "mm", "qd" in any case; ParseError otherwise.
Family parse_family(std::string_view name);

struct FamilyParams {
    double theta = 0.0;
    double p = 0.0;
};

DensityMatrix rho_m(const FamilyParams &params);
DensityMatrix rho_mm(const FamilyParams &params);
DensityMatrix rho_qd(double p);
DensityMatrix family_state(Family family, const FamilyParams &params);

/// The normal-form filter pair for rho_m: f_A = diag(tan theta, 1),
/// f_B = identity. DomainError unless 0 < theta <= pi/4.
std::pair<LocalFilter, LocalFilter> paper_filter_rho_m(double theta);

struct ScanRow {
    double theta;
    double p;
    InaccessibilityReport report;
};

/// Classifies every grid point; rows are theta-major, then p. For QD the
/// theta grid is ignored (an empty one is allowed). Throws DomainError on an
/// empty p grid or an out-of-range value.
std::vector<ScanRow> scan_family(Family family, const std::vector<double> &theta_grid, const std::vector<double> &p_grid,
                                 const Thresholds &th = {}, unsigned workers = 1);

/// theta,p,B,F3,HBstar,HF3star,cA,cB,entangled,flags
std::string scan_to_csv(const std::vector<ScanRow> &rows);

/// lo, ..., hi with `count` points (count == 1 gives {lo}).
std::vector<double> linspace(double lo, double hi, int count);

/// The p at which the QD centre magnitude crosses `threshold`, by bisection
/// of the numerically computed ellipsoid centre (|interval| <= tol). The
/// centre magnitude falls monotonically from 1 at p = 0 to 0 at p = 1, so
/// the region c > threshold is p < root.
double qd_boundary_root(double threshold, double tol = 1e-10);

}  // namespace hqc
