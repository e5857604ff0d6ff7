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

#include "qhedr/circuit/circuit.hpp"

#include <string>

namespace qhedr::circuit {

Circuit::Circuit(int qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count < 0) {
        throw ValidationError("circuit qubit count must be non-negative");
    }
}

Circuit::Circuit(int qubit_count, std::vector<Gate> gates) : Circuit(qubit_count) {
    gates_.reserve(gates.size());
    for (auto& g : gates) {
        add(std::move(g));
    }
}

Circuit& Circuit::add(Gate g) {
    validate(g);
    for (int q : g.qubits()) {
        if (q >= qubit_count_) {
            throw ValidationError("gate " + describe(g) + " touches qubit " + std::to_string(q) +
                                  " outside a " + std::to_string(qubit_count_) + "-qubit circuit");
        }
    }
    gates_.push_back(std::move(g));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.qubit_count_ > qubit_count_) {
        throw ValidationError("cannot append a wider circuit");
    }
    for (const auto& g : other.gates_) {
        gates_.push_back(g);
    }
    return *this;
}

std::vector<TPosition> Circuit::t_positions() const {
    std::vector<TPosition> out;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        if (gates_[i].is_t_type()) {
            out.push_back({i, gates_[i].targets.front()});
        }
    }
    return out;
}

Circuit Circuit::inverse() const {
    Circuit out(qubit_count_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->adjoint());
    }
    return out;
}

Circuit Circuit::remapped(std::span<const int> mapping, int new_qubit_count) const {
    if (static_cast<int>(mapping.size()) < qubit_count_) {
        throw ValidationError("qubit mapping is shorter than the circuit width");
    }
    Circuit out(new_qubit_count);
    for (const auto& g : gates_) {
        Gate m = g;
        for (int& q : m.targets) {
            q = mapping[static_cast<std::size_t>(q)];
        }
        for (int& q : m.controls) {
            q = mapping[static_cast<std::size_t>(q)];
        }
        out.add(std::move(m));
    }
    return out;
}

}  // namespace qhedr::circuit
