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

#include "hqc/criteria.hpp"

#include <cmath>
#include <limits>

#include "hqc/correlations.hpp"
#include "hqc/error.hpp"

namespace hqc {

void Thresholds::check() const {
    if (!(0.0 < c_chsh && c_chsh < c_f3 && c_f3 < 1.0)) {
        throw Error(ErrorKind::DomainError, "thresholds must satisfy 0 < c_chsh < c_f3 < 1");
    }
}

double conjecture_bound_chsh(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw Error(ErrorKind::DomainError, "centre magnitude must lie in [0, 1]");
    }
    return std::max(std::sqrt(2.0 * (1.0 - c)), 1.0);
}

bool certify_inaccessible(const RMatrix &r, Party target_party, Objective objective, const Thresholds &th) {
    th.check();
    const SteeringEllipsoid e = compute_ellipsoid(r, other(target_party));
    return centre_magnitude(e) > th.for_objective(objective);
}

std::string_view to_string(Flag f) {
    switch (f) {
        case Flag::NoChshViolation:
            return "NO_CHSH_VIOLATION";
        case Flag::HiddenChsh:
            return "HIDDEN_CHSH";
        case Flag::MaximalHiddenChsh:
            return "MAXIMAL_HIDDEN_CHSH";
        case Flag::AInaccessibleChsh:
            return "A_INACCESSIBLE_CHSH";
        case Flag::BInaccessibleChsh:
            return "B_INACCESSIBLE_CHSH";
        case Flag::AbInaccessibleChsh:
            return "AB_INACCESSIBLE_CHSH";
        case Flag::AAccessibleWitnessedChsh:
            return "A_ACCESSIBLE_WITNESSED_CHSH";
        case Flag::BAccessibleWitnessedChsh:
            return "B_ACCESSIBLE_WITNESSED_CHSH";
        case Flag::NoF3Violation:
            return "NO_F3_VIOLATION";
        case Flag::HiddenF3:
            return "HIDDEN_F3";
        case Flag::MaximalHiddenF3:
            return "MAXIMAL_HIDDEN_F3";
        case Flag::AInaccessibleF3:
            return "A_INACCESSIBLE_F3";
        case Flag::BInaccessibleF3:
            return "B_INACCESSIBLE_F3";
        case Flag::AbInaccessibleF3:
            return "AB_INACCESSIBLE_F3";
        case Flag::AAccessibleWitnessedF3:
            return "A_ACCESSIBLE_WITNESSED_F3";
        case Flag::BAccessibleWitnessedF3:
            return "B_ACCESSIBLE_WITNESSED_F3";
    }
    return "UNKNOWN";
}

namespace {

struct FlagSet {
    Flag no_violation, hidden, maximal, a_inacc, b_inacc, ab_inacc, a_witness, b_witness;
};

constexpr FlagSet kChshFlags{Flag::NoChshViolation,   Flag::HiddenChsh,         Flag::MaximalHiddenChsh,
                             Flag::AInaccessibleChsh, Flag::BInaccessibleChsh,  Flag::AbInaccessibleChsh,
                             Flag::AAccessibleWitnessedChsh, Flag::BAccessibleWitnessedChsh};
constexpr FlagSet kF3Flags{Flag::NoF3Violation,   Flag::HiddenF3,        Flag::MaximalHiddenF3,
                           Flag::AInaccessibleF3, Flag::BInaccessibleF3, Flag::AbInaccessibleF3,
                           Flag::AAccessibleWitnessedF3, Flag::BAccessibleWitnessedF3};

}  // namespace

InaccessibilityReport classify(const RMatrix &r, const Thresholds &th,
                               const std::optional<OneSidedOptions> &one_sided_budget) {
    th.check();
    InaccessibilityReport rep;
    rep.thresholds = th;
    rep.b = chsh_max(r).value;
    rep.f3 = f3_max(r);
    try {
        rep.hb_star = hidden_chsh(r);
        rep.hf3_star = hidden_f3(r);
    } catch (const Error &e) {
        rep.hb_star = std::numeric_limits<double>::quiet_NaN();
        rep.hf3_star = std::numeric_limits<double>::quiet_NaN();
        rep.normal_form_error = e.what();
    }
    rep.ellipsoid_a = compute_ellipsoid(r, Party::A);
    rep.ellipsoid_b = compute_ellipsoid(r, Party::B);
    rep.c_a = centre_magnitude(rep.ellipsoid_a);
    rep.c_b = centre_magnitude(rep.ellipsoid_b);

    const DensityMatrix rho = from_r_picture(r);
    const PptResult ppt = ppt_entangled(rho);
    rep.entangled = ppt.entangled;
    rep.ppt_min_eigenvalue = ppt.min_eigenvalue;

    if (one_sided_budget) {
        WitnessValues w{};
        w.hb_a = optimize_one_sided(rho, Party::A, Objective::Chsh, *one_sided_budget).value;
        w.hb_b = optimize_one_sided(rho, Party::B, Objective::Chsh, *one_sided_budget).value;
        w.hf3_a = optimize_one_sided(rho, Party::A, Objective::F3, *one_sided_budget).value;
        w.hf3_b = optimize_one_sided(rho, Party::B, Objective::F3, *one_sided_budget).value;
        rep.witnesses = w;
    }

    auto apply = [&](Objective o, const FlagSet &fs, double direct, double hidden, double quantum_max) {
        const double c = th.for_objective(o);
        // Certifying party W inaccessible uses the other party's centre.
        const bool cert_a = rep.c_b > c;
        const bool cert_b = rep.c_a > c;
        const bool no_violation = direct <= 1.0 + 1e-10;
        if (no_violation) {
            rep.flags.insert(fs.no_violation);
        } else if (cert_a || cert_b) {
            rep.counterexample = true;
        }
        const bool hidden_flag = no_violation && std::isfinite(hidden) && hidden > 1.0 + 1e-8;
        if (hidden_flag) {
            rep.flags.insert(fs.hidden);
            if (hidden >= quantum_max - 1e-8) {
                rep.flags.insert(fs.maximal);
            }
            if (cert_a) {
                rep.flags.insert(fs.a_inacc);
            }
            if (cert_b) {
                rep.flags.insert(fs.b_inacc);
            }
            if (cert_a && cert_b) {
                rep.flags.insert(fs.ab_inacc);
            }
        }
        if (rep.witnesses) {
            const double wa = o == Objective::Chsh ? rep.witnesses->hb_a : rep.witnesses->hf3_a;
            const double wb = o == Objective::Chsh ? rep.witnesses->hb_b : rep.witnesses->hf3_b;
            if (wa > 1.0 + 1e-6) {
                rep.flags.insert(fs.a_witness);
                rep.counterexample = rep.counterexample || cert_a;
            }
            if (wb > 1.0 + 1e-6) {
                rep.flags.insert(fs.b_witness);
                rep.counterexample = rep.counterexample || cert_b;
            }
        }
    };
    apply(Objective::Chsh, kChshFlags, rep.b, rep.hb_star, std::sqrt(2.0));
    apply(Objective::F3, kF3Flags, rep.f3, rep.hf3_star, std::sqrt(3.0));
    return rep;
}

}  // namespace hqc
