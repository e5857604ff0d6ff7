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

#include "qhedr/circuit/circuit.hpp"
#include "qhedr/core/state.hpp"

namespace qhedr::experiments {

/// Shape of the random circuits used by the round-trip study.
struct RandomCircuitSpec {
    int min_qubits = 1;
    int max_qubits = 3;
    int max_gates = 12;
    int max_t_gates = 4;
    bool include_ry = true;
    bool clifford_only = false;
};

/// Uniform draws over X, Z, H, S, CNOT, SWAP, T, T-dagger and Ry. Gate
/// count is in [1, max_gates]; T-type gates are capped at max_t_gates.
circuit::Circuit random_circuit(const RandomCircuitSpec& spec, Rng& rng);

/// Haar-ish pure state from normalized complex Gaussians.
core::StateVector random_state(int n, Rng& rng);

/// Full-rank density matrix G G^dagger / tr, with G complex Gaussian.
core::DensityMatrix random_density(int n, Rng& rng);

/// Standard normal draw built on uniform01 so results replay across platforms.
double normal(Rng& rng);

}  // namespace qhedr::experiments
