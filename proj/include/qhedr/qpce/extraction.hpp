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

#include <array>
#include <string>

#include "qhedr/circuit/circuit.hpp"

namespace qhedr::qpce {

using circuit::Circuit;

/// The five-qubit extraction circuit for rho = 1/2 [[3, 1], [1, 3]].
///
/// Qubit roles: 0 column, 1 row, 2 and 3 eigen register (2 is the low bit),
/// 4 ancilla. Post-selection keeps ancilla = 1 with the register back at 00.
struct ExtractionCircuit {
    static constexpr int kCol = 0;
    static constexpr int kRow = 1;
    static constexpr int kReg0 = 2;
    static constexpr int kReg1 = 3;
    static constexpr int kAncilla = 4;
    static constexpr int kQubits = 5;

    static constexpr double kTheta1 = 0.643;
    static constexpr double kTheta2 = 2.498;
    static constexpr double kAlpha = 2.094;

    /// Targets the run is compared against.
    static constexpr std::array<double, 4> kTheoryTarget{0.6325, 0.3162, 0.3162, 0.6325};
    static constexpr std::array<double, 4> kMeasuredReference{0.5863, 0.4308, 0.3932, 0.5623};
    static constexpr std::array<double, 4> kSubtractiveTarget{0.5754, 0.4110, 0.4110, 0.5754};
    static constexpr double kHardwareFidelityReference = 0.9870;

    /// Histogram key prefix (ancilla, reg1, reg0) of the surviving shots.
    static constexpr const char* kPostselectPrefix = "100";
};

struct ExtractionStages {
    Circuit preparation{ExtractionCircuit::kQubits};
    Circuit phase_estimation{ExtractionCircuit::kQubits};
    Circuit rotation{ExtractionCircuit::kQubits};
    Circuit inverse_phase_estimation{ExtractionCircuit::kQubits};

    Circuit full() const;
};

ExtractionStages build_extraction_stages();
Circuit build_extraction_circuit();

struct ExtractionExact {
    CVector data_state;        // post-selected (col, row) amplitudes, normalized
    double postselect_probability = 0.0;
    CVector full_state;        // all five qubits before post-selection
};

/// Noiseless simulation of the circuit from |00000>.
ExtractionExact extraction_exact();

}  // namespace qhedr::qpce
