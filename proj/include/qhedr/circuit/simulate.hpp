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

#include "qhedr/circuit/circuit.hpp"
#include "qhedr/core/state.hpp"

namespace qhedr::circuit {

using core::DensityMatrix;
using core::StateVector;

/// In-place application of `g` to an amplitude vector; gate qubit indices are bit positions.
void apply_gate(CVector& amplitudes, const Gate& g);
/// In-place conjugation rho -> G rho G^dagger.
void apply_gate(CMatrix& rho, const Gate& g);

StateVector simulate_statevector(const Circuit& c, const StateVector& input);
DensityMatrix simulate_density(const Circuit& c, const DensityMatrix& input);

/// Dense 2^n x 2^n unitary of the whole circuit.
CMatrix circuit_unitary(const Circuit& c);

struct MeasureResult {
    std::vector<int> bits;  // bits[j] is the outcome of qubits[j]
    StateVector collapsed;
    double probability;
};

/// Joint projective measurement of `qubits` in the computational basis.
/// The collapsed state keeps every qubit and is renormalized.
MeasureResult measure_qubits(const StateVector& state, std::span<const int> qubits, Rng& rng);
MeasureResult measure_qubits(const StateVector& state, std::span<const int> qubits, std::uint64_t seed);

struct PostselectResult {
    StateVector state;
    double probability;
};

/// Keeps the branch where `qubit` reads `value`. Throws "post-selection
/// impossible" when that branch has probability below 1e-12.
PostselectResult postselect(const StateVector& state, int qubit, int value);

/// Removes qubits that are known to sit in the given basis values and
/// returns the state of the remaining qubits (relative order kept).
/// Throws if the state has weight outside that subspace.
StateVector drop_qubits(const StateVector& state, std::span<const int> qubits, std::span<const int> values,
                        double tol = 1e-9);

/// Anything that can run gates and projective measurements on logical qubits.
class QuantumBackend {
  public:
    virtual ~QuantumBackend() = default;
    virtual void apply(const Gate& g) = 0;
    /// Samples a joint computational-basis outcome; bits[j] belongs to qubits[j].
    virtual std::vector<int> measure(std::span<const int> qubits, Rng& rng) = 0;
    /// Forces the outcome `bits`; returns the probability that branch had.
    virtual double force(std::span<const int> qubits, std::span<const int> bits) = 0;
};

}  // namespace qhedr::circuit
