// Copyright 2026 The QHEDR Authors
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
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qhedr {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Deterministic generator used for every sampled quantity in the project.
/// std::mt19937_64 is fully specified by the standard, so a seed replays
/// bit-identically across platforms as long as draws go through
/// `uniform01` rather than the implementation-defined distributions.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Raised when an input violates a documented precondition or invariant.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kHermitianTolerance = 1e-9;
inline constexpr double kPsdTolerance = -1e-9;
inline constexpr double kBranchFloor = 1e-12;

}  // namespace qhedr
