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

#include <span>
#include <vector>

#include "qhedr/core/state.hpp"

namespace qhedr::qpce {

using core::DensityMatrix;
using core::StateVector;

/// M real sample vectors sharing one dimension N.
struct Dataset {
    std::vector<std::vector<double>> vectors;

    std::size_t size() const { return vectors.size(); }
    /// Throws if the set is empty or the dimensions disagree.
    std::size_t dimension() const;
    std::vector<double> mean() const;
};

/// Subtracts the sample mean from every vector, then scales each to unit norm.
/// A vector equal to the mean has no direction; the error names its index.
Dataset standardize(const Dataset& d);

/// v / ||v|| zero-padded to the next power of two.
StateVector amplitude_encode(std::span<const double> v);

/// (1/M) sum_k |v_k><v_k| over unit-norm, power-of-two-padded vectors.
DensityMatrix covariance_density(const Dataset& d);

}  // namespace qhedr::qpce
