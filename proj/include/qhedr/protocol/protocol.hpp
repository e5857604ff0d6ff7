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
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qhedr/core/state.hpp"
#include "qhedr/qhe/gadget.hpp"
#include "qhedr/qhe/pauli_key.hpp"
#include "qhedr/qhe/program.hpp"
#include "qhedr/qpce/dataset.hpp"
#include "qhedr/protocol/channel.hpp"
#include "qhedr/protocol/messages.hpp"

namespace qhedr::protocol {

/// Plaintext handed to the client. Mixed states are purified onto
/// client-held reference qubits; a dataset is standardized and its
/// covariance operator encoded as vec(rho) on 2n qubits.
using ProtocolInput = std::variant<core::StateVector, core::DensityMatrix, qpce::Dataset>;

/// Everything the client keeps to itself between steps.
struct ClientState {
    std::unique_ptr<QubitRegistry> registry;
    qhe::PauliKey key;
    std::vector<int> data;
    std::vector<int> reference;
    std::vector<int> client_halves;
    std::vector<int> server_halves;
    bool encrypted = false;
};

/// Step 1 and 2: load the plaintext, make `m_required` Bell pairs, draw the key.
/// When `key` is given it is used instead of a fresh draw.
ClientState client_prepare(const ProtocolInput& input, std::size_t m_required, std::uint64_t seed,
                           std::optional<qhe::PauliKey> key = std::nullopt,
                           circuit::DeferredSimulator::Mode mode = circuit::DeferredSimulator::Mode::Lazy);

/// Step 3: one-time-pad the data qubits and package the request. A key
/// instance is accepted at most once per process.
CipherMessage client_encrypt(ClientState& client, const circuit::Circuit& circuit);

/// Step 4: lower the circuit, run it on the ciphertext with one gadget per
/// non-Clifford gate and derive the key-update program. The server never measures.
EvalTranscript server_evaluate(const CipherMessage& msg, QubitRegistry& registry);

struct ProtocolReport {
    CMatrix decrypted;   // reduced state of the data qubits after decryption
    CMatrix ciphertext;  // same qubits before decryption
    std::vector<qhe::BellOutcome> outcomes;
    qhe::FinalKey final_key;
    qhe::PauliKey initial_key;
    qhe::KeyUpdateProgram program;
    qhe::QuasiCompactnessMetrics metrics;
    std::vector<Envelope> log;
    NonInteractivityReport interactivity;
    double branch_probability = 1.0;  // product of forced branch weights
    int peak_live_qubits = 0;
    std::size_t ownership_violations = 0;

    nlohmann::json to_json() const;
};

/// Steps 5 and 6: measure each gadget in the basis its h_i selects, in order,
/// then evaluate the final key and undo the pad. With `forced`, outcome i is
/// taken from forced[i] instead of being sampled.
ProtocolReport client_measure_and_decrypt(const EvalTranscript& transcript, ClientState& client, Rng& rng,
                                          const std::vector<qhe::BellOutcome>* forced = nullptr);

struct ProtocolConfig {
    circuit::Circuit circuit{0};
    ProtocolInput input = core::StateVector::zero(1);
    std::uint64_t seed = 0;
    std::optional<qhe::PauliKey> key;
    std::optional<std::vector<qhe::BellOutcome>> forced_outcomes;
    circuit::DeferredSimulator::Mode mode = circuit::DeferredSimulator::Mode::Lazy;
};

/// All six steps over an in-process channel. Errors come back as
/// ProtocolError tagged with the failing stage.
ProtocolReport run_protocol(const ProtocolConfig& config);

/// Number of data qubits an input occupies.
int input_qubits(const ProtocolInput& input);

}  // namespace qhedr::protocol
