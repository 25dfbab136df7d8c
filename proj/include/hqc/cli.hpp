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

// The `hqc` command line.
//
//   hqc analyze STATE [--format json|rcsv] [--one-sided]
//   hqc certify STATE --party A|B --objective chsh|f3
//   hqc scan m|mm|qd [--theta lo:hi:count] --p lo:hi:count [--out FILE]
//   hqc sweep --n N [--seed S] [--out-prefix PREFIX] [--bins K] [--rank-mix w1,w2,w3,w4]
//   hqc filter STATE (--fa FILE [--fb FILE] | --optimize A|B chsh|f3) [--out FILE]
//
// JSON goes to `out`. Exit status: 0 success, 2 bad input (an error object
// is printed), 3 a counterexample to the centre bound was found.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCounterexample = 3;

/// The only environment the CLI reads.
struct Environment {
    std::optional<std::string> hqc_seed;

    static Environment from_process();
};

/// `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const Environment &env = {});

}  // namespace hqc::cli
