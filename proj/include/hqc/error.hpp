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

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hqc {

enum class ErrorKind {
    NotHermitian,
    TraceNotOne,
    NotPositive,
    ZeroProbability,
    ZeroSuccessProbability,
    SingularFilter,
    ComplexSpectrum,
    DegenerateNormalForm,
    DegenerateEllipsoid,
    DomainError,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `deviation` carries the
/// measured violation for invariant checks (NaN when not applicable).
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message,
          double deviation = std::numeric_limits<double>::quiet_NaN());

    ErrorKind kind() const noexcept { return kind_; }
    double deviation() const noexcept { return deviation_; }

   private:
    ErrorKind kind_;
    double deviation_;
};

}  // namespace hqc
