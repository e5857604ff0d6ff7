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

#include "qhedr/qpce/extraction.hpp"

#include <cmath>
#include <numbers>

#include "qhedr/circuit/simulate.hpp"
#include "qhedr/qpce/phase_estimation.hpp"

namespace qhedr::qpce {

using circuit::Gate;
using std::numbers::pi;

Circuit ExtractionStages::full() const {
    Circuit c(ExtractionCircuit::kQubits);
    c.append(preparation);
    c.append(phase_estimation);
    c.append(rotation);
    c.append(inverse_phase_estimation);
    return c;
}

ExtractionStages build_extraction_stages() {
    ExtractionStages s;

    // Amplitude encoding of [1.5, 0.5, 0.5, 1.5]: split the row, then rotate
    // the column conditioned on each row value.
    s.preparation.add(Gate::u3(ExtractionCircuit::kRow, pi / 2, 0, 0));
    s.preparation.add(Gate::x(ExtractionCircuit::kRow));
    s.preparation.add(Gate::u3(ExtractionCircuit::kCol, ExtractionCircuit::kTheta1, 0, 0).controlled_by({ExtractionCircuit::kRow}));
    s.preparation.add(Gate::x(ExtractionCircuit::kRow));
    s.preparation.add(Gate::u3(ExtractionCircuit::kCol, ExtractionCircuit::kTheta2, 0, 0).controlled_by({ExtractionCircuit::kRow}));

    // e^{i rho pi/2} = e^{3 i pi/4} Rx(-pi/2) and e^{i rho pi} = X.
    s.phase_estimation.add(Gate::h(ExtractionCircuit::kReg0));
    s.phase_estimation.add(Gate::h(ExtractionCircuit::kReg1));
    s.phase_estimation.add(Gate::u3(ExtractionCircuit::kRow, -pi / 2, -pi / 2, pi / 2).controlled_by({ExtractionCircuit::kReg0}));
    s.phase_estimation.add(Gate::u1(ExtractionCircuit::kReg0, 3 * pi / 4));
    s.phase_estimation.add(Gate::cnot(ExtractionCircuit::kReg1, ExtractionCircuit::kRow));
    s.phase_estimation.append(build_inverse_qft({ExtractionCircuit::kReg0, ExtractionCircuit::kReg1}, ExtractionCircuit::kQubits));

    // Remap |10> to |11>, rotate the ancilla on |11>, undo the remap.
    s.rotation.add(Gate::cnot(ExtractionCircuit::kReg1, ExtractionCircuit::kReg0));
    s.rotation.add(Gate::ry(ExtractionCircuit::kAncilla, ExtractionCircuit::kAlpha).controlled_by({ExtractionCircuit::kReg0, ExtractionCircuit::kReg1}));
    s.rotation.add(Gate::cnot(ExtractionCircuit::kReg1, ExtractionCircuit::kReg0));

    s.inverse_phase_estimation = s.phase_estimation.inverse();
    return s;
}

Circuit build_extraction_circuit() {
    return build_extraction_stages().full();
}

ExtractionExact extraction_exact() {
    const auto out = circuit::simulate_statevector(build_extraction_circuit(), core::StateVector::zero(ExtractionCircuit::kQubits));
    ExtractionExact e;
    e.full_state = out.amplitudes();
    e.data_state = CVector::Zero(4);
    // Surviving basis index: ancilla bit 4 set, register bits 2 and 3 clear.
    for (Eigen::Index d = 0; d < 4; ++d) {
        e.data_state[d] = e.full_state[(Eigen::Index{1} << ExtractionCircuit::kAncilla) | d];
    }
    e.postselect_probability = e.data_state.squaredNorm();
    e.data_state /= e.data_state.norm();
    return e;
}

}  // namespace qhedr::qpce
