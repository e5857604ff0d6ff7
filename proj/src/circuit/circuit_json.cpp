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

#include "qhedr/circuit/circuit_json.hpp"

#include <fstream>

namespace qhedr::circuit {

using nlohmann::json;

json gate_to_json(const Gate& g) {
    json j;
    j["kind"] = std::string(kind_name(g.kind));
    j["targets"] = g.targets;
    j["controls"] = g.controls;
    j["params"] = g.params;
    if (g.kind == GateKind::ControlledMatrix) {
        json rows = json::array();
        for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) {
                row.push_back({g.matrix(r, c).real(), g.matrix(r, c).imag()});
            }
            rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
    }
    return j;
}

Gate gate_from_json(const json& j) {
    try {
        Gate g;
        g.kind = parse_kind(j.at("kind").get<std::string>());
        g.targets = j.at("targets").get<std::vector<int>>();
        g.controls = j.value("controls", std::vector<int>{});
        g.params = j.value("params", std::vector<double>{});
        if (g.kind == GateKind::ControlledMatrix) {
            const auto& rows = j.at("matrix");
            const auto n = static_cast<Eigen::Index>(rows.size());
            g.matrix.resize(n, n);
            for (Eigen::Index r = 0; r < n; ++r) {
                const auto& row = rows.at(static_cast<std::size_t>(r));
                if (static_cast<Eigen::Index>(row.size()) != n) {
                    throw ValidationError("controlled-matrix rows must be square");
                }
                for (Eigen::Index c = 0; c < n; ++c) {
                    const auto& e = row.at(static_cast<std::size_t>(c));
                    g.matrix(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
                }
            }
        }
        validate(g);
        return g;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed gate: ") + e.what());
    }
}

json circuit_to_json(const Circuit& c) {
    json gates = json::array();
    for (const auto& g : c.gates()) {
        gates.push_back(gate_to_json(g));
    }
    return {{"qubits", c.qubit_count()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
    int n = 0;
    try {
        n = j.at("qubits").get<int>();
        if (!j.at("gates").is_array()) {
            throw ValidationError("circuit 'gates' must be an array");
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed circuit: ") + e.what());
    }
    Circuit c(n);
    for (const auto& g : j.at("gates")) {
        c.add(gate_from_json(g));
    }
    return c;
}

Circuit load_circuit(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open circuit file " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("circuit file " + path.string() + " is not valid JSON: " + e.what());
    }
    return circuit_from_json(j);
}

void save_circuit(const Circuit& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << circuit_to_json(c).dump(2) << '\n';
}

}  // namespace qhedr::circuit
