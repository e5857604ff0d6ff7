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

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "qhedr/circuit/circuit.hpp"

namespace qhedr::qpce {

using circuit::Circuit;

struct PhaseEstimationConfig {
    int precision_bits = 2;
    double evolution_time = 2.0 * std::numbers::pi;  // t0

    std::size_t slice_count() const { return std::size_t{1} << precision_bits; }
    void validate() const;
};

/// Where the pieces of a phase-estimation circuit live.
struct RegisterLayout {
    std::vector<int> system;      // qubits the evolution e^{i rho t} acts on
    std::vector<int> eigen;       // eigen[k] has weight 2^k
    int total_qubits = 0;
};

/// Default layout: system on 0..n-1, register on n..n+t-1.
RegisterLayout default_layout(int system_qubits, int precision_bits);

/// Little-endian quantum Fourier transform on `qubits` (qubits[k] weight 2^k):
/// |y> -> 2^{-t/2} sum_x e^{2 pi i x y / 2^t} |x>.
Circuit build_qft(const std::vector<int>& qubits, int total_qubits);
Circuit build_inverse_qft(const std::vector<int>& qubits, int total_qubits);

/// H on the register, controlled e^{i rho 2^k t0 / T} from register qubit k,
/// inverse QFT. An eigenvalue lambda lands on register value lambda t0 / 2 pi.
Circuit build_phase_estimation(const CMatrix& rho, const PhaseEstimationConfig& cfg, const RegisterLayout& layout);
Circuit build_phase_estimation(const CMatrix& rho, const PhaseEstimationConfig& cfg);

/// How well the register represents the spectrum of rho.
struct QuantizationReport {
    double max_phase_error = 0.0;  // in register units, |y - round(y)| maximized over eigenvalues
    std::vector<std::string> warnings;
};
QuantizationReport quantization_report(const CMatrix& rho, const PhaseEstimationConfig& cfg);

/// Eigenvalue represented by register value y.
inline double register_eigenvalue(std::size_t y, const PhaseEstimationConfig& cfg) {
    return 2.0 * std::numbers::pi * static_cast<double>(y) / cfg.evolution_time;
}

}  // namespace qhedr::qpce
