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

#include "qhedr/circuit/simulate.hpp"
#include "qhedr/qhe/key_tracker.hpp"

namespace qhedr::qhe {

using circuit::QuantumBackend;

/// Qubit ids of gadget i: the data wire and both halves of its Bell pair.
struct GadgetRecord {
    int index = 0;
    int data_qubit = 0;
    int client_half = 0;
    int server_half = 0;
    bool consumed = false;  // server has swapped data into the pair
    bool measured = false;  // client has read the outcome

    void validate() const;
};

struct BellOutcome {
    int r_a = 0;
    int r_b = 0;
    int gadget_index = 0;
};

/// |beta_00> on (client_half, server_half).
void prepare_bell_pair(QuantumBackend& backend, const GadgetRecord& rec);

/// Server half of the gadget: `g` on the data qubit, then SWAP(data, s_i).
/// Afterwards the data wire holds the Bell partner of c_i and s_i carries
/// the gated ciphertext.
void server_gadget_step(QuantumBackend& backend, const Gate& g, GadgetRecord& rec);

/// Measurement of (s_i, c_i) in the rotated Bell basis {(U^h)^dagger (x) I |beta>}:
/// U^h on s_i, CNOT(s_i -> c_i), H on s_i, computational readout. The s_i
/// bit is r_b and the c_i bit is r_a; the data wire is left holding
/// X^{r_a} Z^{r_b} U^h applied to what the server swapped in.
BellOutcome rotated_bell_measurement(QuantumBackend& backend, GadgetRecord& rec, const Gate& basis, int h_bit,
                                     Rng& rng);

/// Same circuit with the outcome forced; `probability` receives the branch weight.
BellOutcome rotated_bell_measurement_forced(QuantumBackend& backend, GadgetRecord& rec, const Gate& basis, int h_bit,
                                            int r_a, int r_b, double* probability = nullptr);

}  // namespace qhedr::qhe
