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

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qhedr/protocol/registry.hpp"

namespace qhedr::protocol {

struct Envelope {
    std::size_t seq = 0;
    Actor from = Actor::Client;
    Actor to = Actor::Server;
    std::string kind;
    /// Qubit ids whose ownership moves with the message; non-empty marks a
    /// quantum-bearing message.
    std::vector<int> qubits;
    nlohmann::json payload;

    bool quantum() const { return !qubits.empty(); }
    nlohmann::json to_json() const;
};

/// Ordered point-to-point delivery between the two actors.
class Transport {
  public:
    virtual ~Transport() = default;
    virtual void send(Envelope e) = 0;
    virtual std::optional<Envelope> receive(Actor to) = 0;
    virtual const std::vector<Envelope>& log() const = 0;
};

/// Transport inside one process. Delivery of a quantum-bearing message
/// reassigns its qubits to the receiver in the registry.
class InProcessChannel : public Transport {
  public:
    explicit InProcessChannel(QubitRegistry& registry) : registry_(registry) {}

    void send(Envelope e) override;
    std::optional<Envelope> receive(Actor to) override;
    const std::vector<Envelope>& log() const override { return log_; }

  private:
    QubitRegistry& registry_;
    std::deque<Envelope> queue_;
    std::vector<Envelope> log_;
};

struct NonInteractivityReport {
    std::size_t quantum_messages = 0;
    std::size_t messages_to_server = 0;
    bool key_symbols_to_server = false;
    std::vector<std::string> issues;

    bool ok() const { return issues.empty(); }
    nlohmann::json to_json() const;
};

/// Checks a message log: exactly one client-to-server and one
/// server-to-client quantum message, in that order, nothing reaching the
/// server afterwards, and no key symbol in anything the server receives.
NonInteractivityReport scan_log(const std::vector<Envelope>& log);

nlohmann::json trace_to_json(const std::vector<Envelope>& log);

}  // namespace qhedr::protocol
