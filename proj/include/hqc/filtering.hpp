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

// Local filtering (SLOCC) of two-qubit states, the Bell-diagonal normal form
// and the hidden-correlation measures it defines, and a numerical search for
// the best filter available to a single party.

#include <array>
#include <cstdint>

#include "hqc/state.hpp"

namespace hqc {

/// An invertible 2x2 filter scaled so its largest singular value is 1, i.e.
/// f^dag f <= 1 and the filter is the success branch of a valid two-outcome
/// measurement.
class LocalFilter {
   public:
    /// Rescales `m`; throws SingularFilter if |det| of the rescaled matrix is
    /// <= 1e-12. Already-normalised input is returned bit-for-bit.
    static LocalFilter normalized(const CMat2 &m);
    static LocalFilter identity();

    const CMat2 &matrix() const noexcept { return f_; }

   private:
    explicit LocalFilter(const CMat2 &f) : f_(f) {}
    CMat2 f_;
};

struct FilteredState {
    DensityMatrix state;
    double success_probability;
};

/// rho' = (fa (x) fb) rho (fa (x) fb)^dag / p with
/// p = Tr[(fa^dag fa (x) fb^dag fb) rho]. Throws ZeroSuccessProbability when
/// p <= 1e-12.
FilteredState apply_filters(const DensityMatrix &rho, const LocalFilter &fa, const LocalFilter &fb);

/// Only `party` filters; the other side applies the identity.
FilteredState apply_one_sided(const DensityMatrix &rho, const LocalFilter &f, Party party);

/// Eigenvalues nu_0 >= nu_1 >= nu_2 >= nu_3 of eta R eta R^T with
/// eta = diag(1, -1, -1, -1).
struct NormalFormSpectrum {
    std::array<double, 4> nu{};
};

/// Throws ComplexSpectrum when an eigenvalue has an imaginary part beyond
/// roundoff (see the implementation for the tolerance).
NormalFormSpectrum normal_form_spectrum(const RMatrix &r);

/// diag(1, -sqrt(nu1/nu0), -sqrt(nu2/nu0), -sqrt(nu3/nu0)). Throws
/// DegenerateNormalForm when nu0 <= 1e-12.
RMatrix normal_form_r(const RMatrix &r);

/// CHSH maximum of the normal form, sqrt((nu1 + nu2) / nu0). This is the
/// optimum over all pairs of local filters.
double hidden_chsh(const RMatrix &r);

/// F3 maximum of the normal form, sqrt((nu1 + nu2 + nu3) / nu0). A lower
/// bound on the optimum over filter pairs.
double hidden_f3(const RMatrix &r);

struct OneSidedOptions {
    int starts = 32;
    int max_iters = 500;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

inline constexpr double kFilterFloor = 1e-4;

struct OneSidedResult {
    double value;
    LocalFilter filter;
    Objective objective;
    Party party;
    bool converged;
    int starts_used;
    /// The smaller singular value of the best filter sits at the floor
    /// kFilterFloor; the supremum may only be approached in the limit.
    bool at_filter_boundary;
};

/// Maximises chsh_max / f3_max of the one-sided filtered state over filters
/// diag(d, 1) V with d in [kFilterFloor, 1] and V in SU(2). Multi-start
/// Nelder-Mead; start 0 is the identity filter, start k > 0 draws its initial
/// point from stream k of `seed`. Ties go to the lowest start index.
OneSidedResult optimize_one_sided(const DensityMatrix &rho, Party party, Objective objective,
                                  const OneSidedOptions &options = {});

}  // namespace hqc
