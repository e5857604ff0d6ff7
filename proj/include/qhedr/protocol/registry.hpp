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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhedr/circuit/deferred_simulator.hpp"

namespace qhedr::protocol {

enum class Actor { Client, Server };
enum class QubitRole { Data, Reference, BellClientHalf, BellServerHalf };

std::string actor_name(Actor a);
std::string role_name(QubitRole r);

/// Failure inside the protocol, tagged with the stage that raised it.
class ProtocolError : public std::runtime_error {
  public:
    ProtocolError(std::string stage, const std::string& message)
        : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

  private:
    std::string stage_;
};

/// Shared simulated state plus who may touch which qubit.
class QubitRegistry {
  public:
    explicit QubitRegistry(circuit::DeferredSimulator::Mode mode = circuit::DeferredSimulator::Mode::Lazy);

    int add(Actor owner, QubitRole role);
    Actor owner(int id) const;
    QubitRole role(int id) const;
    std::vector<int> ids_with_role(QubitRole role) const;
    std::size_t size() const { return owner_.size(); }

    /// Moves `ids` from one actor to the other; each must currently belong to `from`.
    void transfer(const std::vector<int>& ids, Actor from, Actor to);

    /// Throws ProtocolError("ownership", ...) and counts a violation unless
    /// `who` owns every id.
    void check(Actor who, const std::vector<int>& ids);
    std::size_t violations() const { return violations_; }

    circuit::DeferredSimulator& state() { return sim_; }

  private:
    struct Entry {
        Actor owner;
        QubitRole role;
    };
    const Entry& entry(int id) const;

    std::map<int, Entry> owner_;
    std::size_t violations_ = 0;
    circuit::DeferredSimulator sim_;
};

/// The shared state as seen by one actor: every operation is ownership-checked.
class ActorBackend : public circuit::QuantumBackend {
  public:
    ActorBackend(QubitRegistry& registry, Actor actor) : registry_(registry), actor_(actor) {}

    void apply(const circuit::Gate& g) override;
    std::vector<int> measure(std::span<const int> qubits, Rng& rng) override;
    double force(std::span<const int> qubits, std::span<const int> bits) override;

  private:
    QubitRegistry& registry_;
    Actor actor_;
};

}  // namespace qhedr::protocol
