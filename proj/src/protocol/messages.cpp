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

#include "qhedr/protocol/messages.hpp"

#include "qhedr/circuit/circuit_json.hpp"

namespace qhedr::protocol {

nlohmann::json CipherMessage::to_json() const {
    return {{"qubits", qubits}, {"bell_halves", bell_halves}, {"circuit", circuit::circuit_to_json(circuit)}};
}

CipherMessage CipherMessage::from_json(const nlohmann::json& j) {
    try {
        CipherMessage m;
        m.qubits = j.at("qubits").get<std::vector<int>>();
        m.bell_halves = j.at("bell_halves").get<std::vector<int>>();
        m.circuit = circuit::circuit_from_json(j.at("circuit"));
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed cipher message: ") + e.what());
    }
}

nlohmann::json EvalTranscript::to_json() const {
    return {{"result_qubits", result_qubits}, {"bell_halves", bell_halves}, {"program", program.to_json()}};
}

EvalTranscript EvalTranscript::from_json(const nlohmann::json& j) {
    try {
        EvalTranscript t;
        t.result_qubits = j.at("result_qubits").get<std::vector<int>>();
        t.bell_halves = j.at("bell_halves").get<std::vector<int>>();
        t.program = qhe::KeyUpdateProgram::from_json(j.at("program"));
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed transcript: ") + e.what());
    }
}

}  // namespace qhedr::protocol
