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

// Steering-ellipsoid bounds on CHSH/F3 violation and the certificates they
// give for hidden correlations that one party cannot reach alone.
//
// Every "inaccessible" verdict here is conditional on the conjectured bound
// B <= max{sqrt(2(1 - c)), 1} (and its F3 threshold analogue) holding for
// all states. A certificate only ever says "inaccessible"; the absence of
// one means "unknown", never "accessible".

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "hqc/ellipsoid.hpp"
#include "hqc/filtering.hpp"

namespace hqc {

/// Centre magnitudes beyond which no CHSH (resp. F3) violation has been
/// observed. 0.66 is the empirical literal, not 2/3.
struct Thresholds {
    double c_chsh = 0.5;
    double c_f3 = 0.66;

    /// Throws DomainError unless 0 < c_chsh < c_f3 < 1.
    void check() const;
    double for_objective(Objective o) const { return o == Objective::Chsh ? c_chsh : c_f3; }
};

/// max{sqrt(2(1 - c)), 1}; DomainError outside [0, 1].
double conjecture_bound_chsh(double c);

/// True when `target_party` provably (modulo the conjecture) cannot produce
/// a violation of `objective` with its own filters: the opposite party's
/// ellipsoid, which such filters leave unchanged, has its centre beyond the
/// threshold. Degenerate ellipsoids use their point centre.
bool certify_inaccessible(const RMatrix &r, Party target_party, Objective objective, const Thresholds &th = {});

enum class Flag {
    NoChshViolation,
    HiddenChsh,
    MaximalHiddenChsh,
    AInaccessibleChsh,
    BInaccessibleChsh,
    AbInaccessibleChsh,
    AAccessibleWitnessedChsh,
    BAccessibleWitnessedChsh,
    NoF3Violation,
    HiddenF3,
    MaximalHiddenF3,
    AInaccessibleF3,
    BInaccessibleF3,
    AbInaccessibleF3,
    AAccessibleWitnessedF3,
    BAccessibleWitnessedF3,
};

std::string_view to_string(Flag f);

struct WitnessValues {
    double hb_a, hb_b, hf3_a, hf3_b;
};

struct InaccessibilityReport {
    double b = 0.0;
    double f3 = 0.0;
    /// NaN when the normal form is degenerate (see normal_form_error).
    double hb_star = 0.0;
    double hf3_star = 0.0;
    std::optional<std::string> normal_form_error;
    double c_a = 0.0;
    double c_b = 0.0;
    SteeringEllipsoid ellipsoid_a;
    SteeringEllipsoid ellipsoid_b;
    bool entangled = false;
    double ppt_min_eigenvalue = 0.0;
    std::set<Flag> flags;
    /// Inaccessibility flags rest on the ellipsoid-centre conjecture.
    bool conjecture_conditional = true;
    Thresholds thresholds;
    /// One-sided optimiser values, present when a budget was given.
    std::optional<WitnessValues> witnesses;
    /// A party certified inaccessible yet witnessed accessible: the
    /// conjecture fails on this state.
    bool counterexample = false;

    bool has(Flag f) const { return flags.count(f) != 0; }
};

/// Computes every scalar and sets the flags:
///   NO_X_VIOLATION      X <= 1 (+1e-10)
///   HIDDEN_X            no violation, hidden measure > 1 + 1e-8
///   MAXIMAL_HIDDEN_X    hidden and hidden measure >= quantum max - 1e-8
///   W_INACCESSIBLE_X    hidden and certify_inaccessible(W, X)
///   AB_INACCESSIBLE_X   both A and B flags
/// With a budget, the one-sided optimiser also runs for both parties and
/// W_ACCESSIBLE_WITNESSED_X is set when its value exceeds 1 + 1e-6.
InaccessibilityReport classify(const RMatrix &r, const Thresholds &th = {},
                               const std::optional<OneSidedOptions> &one_sided_budget = std::nullopt);

}  // namespace hqc
