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

#include <vector>

#include "json.hpp"
#include "qhedr/circuit/circuit.hpp"
#include "qhedr/qhe/program.hpp"

namespace qhedr::protocol {

/// Client to server: ciphertext qubits, the server halves of the Bell pairs
/// and the circuit to run. Carries no key material.
struct CipherMessage {
    std::vector<int> qubits;
    std::vector<int> bell_halves;
    circuit::Circuit circuit{0};

    nlohmann::json to_json() const;
    static CipherMessage from_json(const nlohmann::json& j);
};

/// Server to client: evaluated ciphertext, returned Bell halves and the
/// key-update program. Carries no measurement outcomes.
struct EvalTranscript {
    std::vector<int> result_qubits;
    std::vector<int> bell_halves;
    qhe::KeyUpdateProgram program;

    nlohmann::json to_json() const;
    static EvalTranscript from_json(const nlohmann::json& j);
};

}  // namespace qhedr::protocol
