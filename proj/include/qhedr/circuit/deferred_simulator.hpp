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

#include <cstddef>
#include <span>
#include <vector>

#include "qhedr/circuit/simulate.hpp"

namespace qhedr::circuit {

/// Statevector backend over sparse logical qubit ids.
///
/// Qubits come into existence as |0> the first time anything touches them
/// and leave the state once measured. In lazy mode gates are queued and
/// only the backward light cone of a measured (or inspected) qubit set is
/// executed, so teleportation-heavy programs never hold more than a handful
/// of qubits at once. Eager mode executes every gate on arrival and exists
/// to cross-check the lazy path.
class DeferredSimulator : public QuantumBackend {
  public:
    enum class Mode { Lazy, Eager };

    explicit DeferredSimulator(Mode mode = Mode::Lazy, int max_live_qubits = 20);

    void apply(const Gate& g) override;
    std::vector<int> measure(std::span<const int> qubits, Rng& rng) override;
    double force(std::span<const int> qubits, std::span<const int> bits) override;

    /// Puts fresh (never touched) qubits into `state`; qubits[k] gets bit k.
    void prepare(std::span<const int> qubits, const StateVector& state);

    /// Reduced density matrix of `qubits` (qubits[k] is bit k of the result).
    CMatrix reduced_density(std::span<const int> qubits);

    /// Pure joint state when `qubits` lists every live qubit; qubits[k] is bit k.
    StateVector statevector(std::span<const int> qubits);

    /// Runs every queued gate.
    void flush();

    bool is_measured(int qubit) const;
    std::vector<int> live_qubits() const { return order_; }
    std::size_t pending_gates() const { return pending_.size(); }
    int peak_live_qubits() const { return peak_; }

  private:
    void run_cone(std::span<const int> qubits);
    void execute(const Gate& g);
    int position_of(int qubit);  // materializes on first use
    int find_position(int qubit) const;
    double collapse(std::span<const int> qubits, std::span<const int> bits);

    Mode mode_;
    int max_live_;
    int peak_ = 0;
    std::vector<int> order_;  // order_[k] is the logical id held by bit k
    CVector amps_;
    std::vector<Gate> pending_;
    std::vector<int> measured_;
};

}  // namespace qhedr::circuit
