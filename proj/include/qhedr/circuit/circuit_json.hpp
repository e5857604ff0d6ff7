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

#include <filesystem>

#include "json.hpp"
#include "qhedr/circuit/circuit.hpp"

namespace qhedr::circuit {

/// {"qubits": n, "gates": [{"kind", "targets", "controls", "params"}]}.
/// controlled-matrix gates add "matrix" as rows of [re, im] pairs.
nlohmann::json gate_to_json(const Gate& g);
Gate gate_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
/// Throws ValidationError on malformed documents or invalid gates.
Circuit circuit_from_json(const nlohmann::json& j);

Circuit load_circuit(const std::filesystem::path& path);
void save_circuit(const Circuit& c, const std::filesystem::path& path);

}  // namespace qhedr::circuit
