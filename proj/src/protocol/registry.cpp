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

#include "qhedr/protocol/registry.hpp"

namespace qhedr::protocol {

std::string actor_name(Actor a) {
    return a == Actor::Client ? "client" : "server";
}

std::string role_name(QubitRole r) {
    switch (r) {
        case QubitRole::Data:
            return "data";
        case QubitRole::Reference:
            return "reference";
        case QubitRole::BellClientHalf:
            return "bell-client-half";
        case QubitRole::BellServerHalf:
            return "bell-server-half";
    }
    return "?";
}

QubitRegistry::QubitRegistry(circuit::DeferredSimulator::Mode mode) : sim_(mode) {}

int QubitRegistry::add(Actor owner, QubitRole role) {
    const int id = static_cast<int>(owner_.size());
    owner_.emplace(id, Entry{owner, role});
    return id;
}

const QubitRegistry::Entry& QubitRegistry::entry(int id) const {
    auto it = owner_.find(id);
    if (it == owner_.end()) {
        throw ProtocolError("ownership", "unknown qubit id " + std::to_string(id));
    }
    return it->second;
}

Actor QubitRegistry::owner(int id) const {
    return entry(id).owner;
}

QubitRole QubitRegistry::role(int id) const {
    return entry(id).role;
}

std::vector<int> QubitRegistry::ids_with_role(QubitRole role) const {
    std::vector<int> out;
    for (const auto& [id, e] : owner_) {
        if (e.role == role) {
            out.push_back(id);
        }
    }
    return out;
}

void QubitRegistry::transfer(const std::vector<int>& ids, Actor from, Actor to) {
    check(from, ids);
    for (int id : ids) {
        owner_.at(id).owner = to;
    }
}

void QubitRegistry::check(Actor who, const std::vector<int>& ids) {
    for (int id : ids) {
        if (entry(id).owner != who) {
            ++violations_;
            throw ProtocolError("ownership", actor_name(who) + " touched " + role_name(entry(id).role) + " qubit " +
                                                 std::to_string(id) + " owned by " + actor_name(entry(id).owner));
        }
    }
}

void ActorBackend::apply(const circuit::Gate& g) {
    registry_.check(actor_, g.qubits());
    registry_.state().apply(g);
}

std::vector<int> ActorBackend::measure(std::span<const int> qubits, Rng& rng) {
    registry_.check(actor_, {qubits.begin(), qubits.end()});
    return registry_.state().measure(qubits, rng);
}

double ActorBackend::force(std::span<const int> qubits, std::span<const int> bits) {
    registry_.check(actor_, {qubits.begin(), qubits.end()});
    return registry_.state().force(qubits, bits);
}

}  // namespace qhedr::protocol
