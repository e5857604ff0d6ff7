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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qhedr/core/state.hpp"

namespace qhedr::core {

/// Shot counts keyed by bitstring.
///
/// For a measured qubit list [q_0, ..., q_{k-1}] the bitstring prints q_{k-1}
/// leftmost and q_0 rightmost, matching the little-endian basis order.
struct MeasurementHistogram {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    std::uint64_t count(const std::string& bits) const {
        auto it = counts.find(bits);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Born probabilities of the joint outcome on `qubits`; outcome bit j is qubits[j].
std::vector<double> marginal_probabilities(const CVector& amplitudes, std::span<const int> qubits);

/// Bitstring of `outcome` over `width` bits, most significant first.
std::string to_bitstring(std::uint64_t outcome, int width);

/// Index into `cumulative` chosen by one uniform draw (inverse CDF).
std::size_t sample_index(std::span<const double> cumulative, Rng& rng);

MeasurementHistogram sample_measurement(const StateVector& state, std::span<const int> qubits,
                                        std::uint64_t shots, std::uint64_t seed);

}  // namespace qhedr::core
