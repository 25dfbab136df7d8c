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

#include "hqc/error.hpp"

namespace hqc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::TraceNotOne:
            return "TraceNotOne";
        case ErrorKind::NotPositive:
            return "NotPositive";
        case ErrorKind::ZeroProbability:
            return "ZeroProbability";
        case ErrorKind::ZeroSuccessProbability:
            return "ZeroSuccessProbability";
        case ErrorKind::SingularFilter:
            return "SingularFilter";
        case ErrorKind::ComplexSpectrum:
            return "ComplexSpectrum";
        case ErrorKind::DegenerateNormalForm:
            return "DegenerateNormalForm";
        case ErrorKind::DegenerateEllipsoid:
            return "DegenerateEllipsoid";
        case ErrorKind::DomainError:
            return "DomainError";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::IoError:
            return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message, double deviation)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), deviation_(deviation) {}

}  // namespace hqc
