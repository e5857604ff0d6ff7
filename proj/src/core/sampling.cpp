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

#include "qhedr/core/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qhedr::core {

std::vector<double> marginal_probabilities(const CVector& amplitudes, std::span<const int> qubits) {
    const int n = qubits_for_dimension(static_cast<std::size_t>(amplitudes.size()));
    if (qubits.empty()) {
        throw ValidationError("measurement requires at least one qubit");
    }
    std::set<int> seen;
    for (int q : qubits) {
        if (q < 0 || q >= n) {
            throw ValidationError("measured qubit index out of range");
        }
        if (!seen.insert(q).second) {
            throw ValidationError("measured qubit listed twice");
        }
    }
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
        std::size_t outcome = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if ((static_cast<std::size_t>(i) >> qubits[j]) & 1U) {
                outcome |= std::size_t{1} << j;
            }
        }
        probs[outcome] += std::norm(amplitudes[i]);
    }
    return probs;
}

std::string to_bitstring(std::uint64_t outcome, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b) {
        if ((outcome >> b) & 1U) {
            s[static_cast<std::size_t>(width - 1 - b)] = '1';
        }
    }
    return s;
}

std::size_t sample_index(std::span<const double> cumulative, Rng& rng) {
    const double total = cumulative.back();
    const double u = uniform01(rng) * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto idx = static_cast<std::size_t>(std::distance(cumulative.begin(), it));
    return std::min(idx, cumulative.size() - 1);
}

MeasurementHistogram sample_measurement(const StateVector& state, std::span<const int> qubits,
                                        std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw ValidationError("shots must be at least 1");
    }
    std::vector<double> probs = marginal_probabilities(state.amplitudes(), qubits);
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());

    Rng rng(seed);
    std::vector<std::uint64_t> tally(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++tally[sample_index(cumulative, rng)];
    }
    MeasurementHistogram hist;
    hist.shots = shots;
    hist.seed = seed;
    const int width = static_cast<int>(qubits.size());
    for (std::size_t k = 0; k < tally.size(); ++k) {
        if (tally[k] > 0) {
            hist.counts[to_bitstring(k, width)] = tally[k];
        }
    }
    return hist;
}

}  // namespace qhedr::core
