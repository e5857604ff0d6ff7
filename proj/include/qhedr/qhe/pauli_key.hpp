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
#include <span>
#include <vector>

#include "qhedr/circuit/gate.hpp"
#include "qhedr/core/state.hpp"

namespace qhedr::qhe {

using core::DensityMatrix;

/// Per-qubit Pauli exponents: qubit q is encrypted by X^{a[q]} Z^{b[q]}.
///
/// Every key carries a process-unique instance id. The one-time-pad check
/// in the protocol layer works on that id, so two independently drawn keys
/// that happen to share bit values are still distinct pads.
struct PauliKey {
    std::vector<int> a;
    std::vector<int> b;
    std::uint64_t id = 0;

    int qubit_count() const { return static_cast<int>(a.size()); }

    /// Key with the given bits and a fresh instance id.
    static PauliKey fixed(std::vector<int> a, std::vector<int> b);
};

/// Uniform 2n-bit key. Deterministic in `seed`.
PauliKey keygen(int n, std::uint64_t seed);
PauliKey keygen(int n, Rng& rng);

/// X^a Z^b over all qubits (qubit q is bit q of the basis index).
CMatrix pauli_operator(std::span<const int> a, std::span<const int> b);

/// X^a Z^b rho Z^b X^a.
DensityMatrix qotp_encrypt(const DensityMatrix& rho, const PauliKey& k);
/// Inverse of qotp_encrypt: X^a Z^b phi Z^b X^a (the map is an involution).
DensityMatrix qotp_decrypt(const DensityMatrix& phi, const PauliKey& k);

/// Gates realizing X^a Z^b on `qubits` (Z first in time, then X).
std::vector<circuit::Gate> pauli_gates(std::span<const int> a, std::span<const int> b, std::span<const int> qubits);

}  // namespace qhedr::qhe
