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

// File formats.
//
//   state   {"dim":[2,2],"matrix":[[{"re":x,"im":y} x4] x4]}
//   R CSV   4 lines of 4 comma-separated reals
//   filter  {"f":[[{"re":x,"im":y} x2] x2]}
//
// Reports serialise every scalar plus both ellipsoids as
// {centre:[3], q:[3x3], semiaxes:[3], degenerate:bool}. Non-finite numbers
// are written as null. The hidden measures use the normalisation in which
// the largest CHSH value is sqrt(2) and the largest F3 value sqrt(3); tables
// that quote "2" for maximal hidden CHSH use the unnormalised CHSH operator.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hqc/criteria.hpp"
#include "hqc/filtering.hpp"

namespace hqc {

/// %.17g; "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double v);

nlohmann::json state_to_json(const DensityMatrix &rho);
/// ParseError on schema violations; state invariants are then checked with
/// `tol` and surface as NotHermitian / TraceNotOne / NotPositive.
DensityMatrix state_from_json(const nlohmann::json &j, double tol = kStateTol);

std::string r_to_csv(const RMatrix &r);
RMatrix r_from_csv(std::string_view text);

nlohmann::json filter_to_json(const LocalFilter &f);
LocalFilter filter_from_json(const nlohmann::json &j);

nlohmann::json ellipsoid_to_json(const SteeringEllipsoid &e);
nlohmann::json report_to_json(const InaccessibilityReport &rep);

/// Parses JSON text, mapping syntax errors to ParseError.
nlohmann::json parse_json(std::string_view text);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view contents);

}  // namespace hqc
