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

#include "qhedr/qhe/key_tracker.hpp"

#include <string>
#include <utility>

namespace qhedr::qhe {

std::string gadget_type_name(GadgetType t) {
    switch (t) {
        case GadgetType::T:
            return "T";
        case GadgetType::Tdg:
            return "T-dagger";
        case GadgetType::Rz:
            return "Rz";
        case GadgetType::Rx:
            return "Rx";
        case GadgetType::Ry:
            return "Ry";
    }
    return "?";
}

GadgetType parse_gadget_type(const std::string& s) {
    for (auto t : {GadgetType::T, GadgetType::Tdg, GadgetType::Rz, GadgetType::Rx, GadgetType::Ry}) {
        if (gadget_type_name(t) == s) {
            return t;
        }
    }
    throw ValidationError("unknown gadget type '" + s + "'");
}

Gate GadgetSpec::basis(int qubit) const {
    switch (type) {
        case GadgetType::T:
            return Gate::s(qubit);
        case GadgetType::Tdg:
            return Gate::sdg(qubit);
        case GadgetType::Rz:
            return Gate::rz(qubit, -2.0 * angle);
        case GadgetType::Rx:
            return Gate::rx(qubit, -2.0 * angle);
        case GadgetType::Ry:
            return Gate::ry(qubit, -2.0 * angle);
    }
    throw ValidationError("unhandled gadget type");
}

bool is_clifford_gate(const Gate& g) {
    switch (g.kind) {
        case GateKind::X:
        case GateKind::Y:
        case GateKind::H:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::SWAP:
            return g.controls.empty();
        case GateKind::Z:
            return g.controls.size() <= 1;
        case GateKind::CNOT:
            return g.controls.size() == 1;
        default:
            return false;
    }
}

bool is_gadget_gate(const Gate& g) {
    if (!g.controls.empty() || g.targets.size() != 1) {
        return false;
    }
    switch (g.kind) {
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::U1:
            return true;
        default:
            return false;
    }
}

KeyTracker::KeyTracker(int n) {
    if (n < 1) {
        throw ValidationError("key tracker needs at least one qubit");
    }
    for (int q = 0; q < n; ++q) {
        a_.emplace_back(Symbol::a0(q));
        b_.emplace_back(Symbol::b0(q));
    }
}

void KeyTracker::check_qubit(int q) const {
    if (q < 0 || q >= qubit_count()) {
        throw ValidationError("qubit " + std::to_string(q) + " outside the " + std::to_string(qubit_count()) +
                              "-qubit key");
    }
}

void KeyTracker::apply_clifford(const Gate& g) {
    if (!is_clifford_gate(g)) {
        throw ValidationError("no Clifford key rule for " + circuit::describe(g));
    }
    for (int q : g.qubits()) {
        check_qubit(q);
    }
    const auto t = static_cast<std::size_t>(g.targets[0]);
    switch (g.kind) {
        case GateKind::X:
        case GateKind::Y:
            break;
        case GateKind::Z:
            if (!g.controls.empty()) {
                // CZ: each side picks up the other's X exponent on its Z.
                const auto c = static_cast<std::size_t>(g.controls[0]);
                const KeyPolynomial ac = a_[c];
                b_[c] ^= a_[t];
                b_[t] ^= ac;
            }
            break;
        case GateKind::H:
            std::swap(a_[t], b_[t]);
            break;
        case GateKind::S:
        case GateKind::Sdg:
            b_[t] ^= a_[t];
            break;
        case GateKind::CNOT: {
            const auto c = static_cast<std::size_t>(g.controls[0]);
            a_[t] ^= a_[c];
            b_[c] ^= b_[t];
            break;
        }
        case GateKind::SWAP: {
            const auto u = static_cast<std::size_t>(g.targets[1]);
            std::swap(a_[t], a_[u]);
            std::swap(b_[t], b_[u]);
            break;
        }
        default:
            throw ValidationError("no Clifford key rule for " + circuit::describe(g));
    }
}

const GadgetSpec& KeyTracker::apply_gadget(const Gate& g) {
    if (!is_gadget_gate(g)) {
        throw ValidationError("no gadget rule for " + circuit::describe(g));
    }
    const int q = g.targets[0];
    check_qubit(q);
    const auto qi = static_cast<std::size_t>(q);
    GadgetSpec spec;
    spec.index = static_cast<int>(gadgets_.size()) + 1;
    spec.data_qubit = q;
    spec.gate = g;
    const KeyPolynomial ra(Symbol::ra(spec.index));
    const KeyPolynomial rb(Symbol::rb(spec.index));
    switch (g.kind) {
        case GateKind::T:
        case GateKind::Tdg:
            spec.type = g.kind == GateKind::T ? GadgetType::T : GadgetType::Tdg;
            spec.h = a_[qi];
            b_[qi] ^= a_[qi] ^ rb;
            a_[qi] ^= ra;
            break;
        default:
            spec.angle = g.params.at(0);
            if (g.kind == GateKind::Rx) {
                spec.type = GadgetType::Rx;
                spec.h = b_[qi];
            } else if (g.kind == GateKind::Ry) {
                spec.type = GadgetType::Ry;
                spec.h = a_[qi] ^ b_[qi];
            } else {
                // U1 equals Rz up to a global phase.
                spec.type = GadgetType::Rz;
                spec.h = a_[qi];
            }
            a_[qi] ^= ra;
            b_[qi] ^= rb;
            break;
    }
    gadgets_.push_back(std::move(spec));
    return gadgets_.back();
}

void KeyTracker::apply(const Gate& g) {
    if (is_gadget_gate(g)) {
        apply_gadget(g);
    } else {
        apply_clifford(g);
    }
}

}  // namespace qhedr::qhe
