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

#include "qhedr/protocol/channel.hpp"

#include <algorithm>

namespace qhedr::protocol {

nlohmann::json Envelope::to_json() const {
    return {{"seq", seq},
            {"from", actor_name(from)},
            {"to", actor_name(to)},
            {"kind", kind},
            {"qubits", qubits},
            {"payload", payload}};
}

void InProcessChannel::send(Envelope e) {
    if (e.from == e.to) {
        throw ProtocolError("transport", "an actor cannot message itself");
    }
    // Sender must hold what it ships.
    registry_.check(e.from, e.qubits);
    e.seq = log_.size();
    log_.push_back(e);
    queue_.push_back(std::move(e));
}

std::optional<Envelope> InProcessChannel::receive(Actor to) {
    auto it = std::find_if(queue_.begin(), queue_.end(), [&](const Envelope& e) { return e.to == to; });
    if (it == queue_.end()) {
        return std::nullopt;
    }
    Envelope e = std::move(*it);
    queue_.erase(it);
    registry_.transfer(e.qubits, e.from, e.to);
    return e;
}

nlohmann::json NonInteractivityReport::to_json() const {
    return {{"quantum_messages", quantum_messages},
            {"messages_to_server", messages_to_server},
            {"key_symbols_to_server", key_symbols_to_server},
            {"issues", issues},
            {"ok", ok()}};
}

NonInteractivityReport scan_log(const std::vector<Envelope>& log) {
    NonInteractivityReport r;
    std::vector<const Envelope*> quantum;
    for (const auto& e : log) {
        if (e.quantum()) {
            quantum.push_back(&e);
        }
        if (e.to == Actor::Server) {
            ++r.messages_to_server;
            const std::string text = e.payload.dump();
            for (const char* marker : {"a0[", "b0[", "ra(", "rb(", "\"key\""}) {
                if (text.find(marker) != std::string::npos) {
                    r.key_symbols_to_server = true;
                    r.issues.push_back("message " + std::to_string(e.seq) + " to the server contains '" + marker + "'");
                }
            }
        }
    }
    r.quantum_messages = quantum.size();
    if (quantum.size() != 2) {
        r.issues.push_back("expected 2 quantum-bearing messages, saw " + std::to_string(quantum.size()));
    } else {
        if (quantum[0]->from != Actor::Client || quantum[0]->to != Actor::Server) {
            r.issues.push_back("first quantum message is not client to server");
        }
        if (quantum[1]->from != Actor::Server || quantum[1]->to != Actor::Client) {
            r.issues.push_back("second quantum message is not server to client");
        }
    }
    if (r.messages_to_server != 1) {
        r.issues.push_back("server received " + std::to_string(r.messages_to_server) + " messages, expected 1");
    }
    return r;
}

nlohmann::json trace_to_json(const std::vector<Envelope>& log) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : log) {
        out.push_back(e.to_json());
    }
    return out;
}

}  // namespace qhedr::protocol
