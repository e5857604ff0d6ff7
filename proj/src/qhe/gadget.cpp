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

#include "qhedr/qhe/gadget.hpp"

#include <string>

namespace qhedr::qhe {

void GadgetRecord::validate() const {
    if (data_qubit == client_half || data_qubit == server_half || client_half == server_half) {
        throw ValidationError("gadget " + std::to_string(index) + " qubits must be distinct");
    }
}

void prepare_bell_pair(QuantumBackend& backend, const GadgetRecord& rec) {
    rec.validate();
    backend.apply(Gate::h(rec.client_half));
    backend.apply(Gate::cnot(rec.client_half, rec.server_half));
}

void server_gadget_step(QuantumBackend& backend, const Gate& g, GadgetRecord& rec) {
    rec.validate();
    if (rec.consumed) {
        throw ValidationError("Bell pair of gadget " + std::to_string(rec.index) + " was already consumed");
    }
    Gate on_data = g;
    on_data.targets = {rec.data_qubit};
    backend.apply(on_data);
    backend.apply(Gate::swap(rec.data_qubit, rec.server_half));
    rec.consumed = true;
}

namespace {

void rotate_and_reduce(QuantumBackend& backend, GadgetRecord& rec, const Gate& basis, int h_bit) {
    rec.validate();
    if (!rec.consumed) {
        throw ValidationError("gadget " + std::to_string(rec.index) + " measured before the server used it");
    }
    if (rec.measured) {
        throw ValidationError("gadget " + std::to_string(rec.index) + " was already measured");
    }
    if (h_bit) {
        Gate u = basis;
        u.targets = {rec.server_half};
        backend.apply(u);
    }
    backend.apply(Gate::cnot(rec.server_half, rec.client_half));
    backend.apply(Gate::h(rec.server_half));
}

}  // namespace

BellOutcome rotated_bell_measurement(QuantumBackend& backend, GadgetRecord& rec, const Gate& basis, int h_bit,
                                     Rng& rng) {
    rotate_and_reduce(backend, rec, basis, h_bit);
    const int qubits[2] = {rec.server_half, rec.client_half};
    const auto bits = backend.measure(qubits, rng);
    rec.measured = true;
    return {bits[1], bits[0], rec.index};
}

BellOutcome rotated_bell_measurement_forced(QuantumBackend& backend, GadgetRecord& rec, const Gate& basis, int h_bit,
                                            int r_a, int r_b, double* probability) {
    rotate_and_reduce(backend, rec, basis, h_bit);
    const int qubits[2] = {rec.server_half, rec.client_half};
    const int bits[2] = {r_b, r_a};
    const double p = backend.force(qubits, bits);
    rec.measured = true;
    if (probability) {
        *probability = p;
    }
    return {r_a, r_b, rec.index};
}

}  // namespace qhedr::qhe
