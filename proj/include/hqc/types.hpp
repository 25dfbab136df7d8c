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

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace hqc {

using cplx = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;

/// One side of the bipartite experiment.
enum class Party { A, B };

constexpr Party other(Party p) { return p == Party::A ? Party::B : Party::A; }

constexpr std::string_view to_string(Party p) { return p == Party::A ? "A" : "B"; }

/// Which correlation inequality a quantity refers to.
enum class Objective { Chsh, F3 };

constexpr std::string_view to_string(Objective o) { return o == Objective::Chsh ? "CHSH" : "F3"; }

}  // namespace hqc
