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

#include "qhedr/circuit/gate.hpp"

namespace qhedr::circuit {

/// Position of a T or T-dagger gate inside a circuit.
struct TPosition {
    std::size_t gate_index;
    int qubit;
};

/// Ordered gate program on a fixed number of qubits.
class Circuit {
  public:
    explicit Circuit(int qubit_count);
    Circuit(int qubit_count, std::vector<Gate> gates);

    /// Validates the gate and its qubit range, then appends it.
    Circuit& add(Gate g);
    Circuit& append(const Circuit& other);

    int qubit_count() const { return qubit_count_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// T and T-dagger gates in circuit order.
    std::vector<TPosition> t_positions() const;

    /// Adjoint circuit: reversed order, each gate replaced by its adjoint.
    Circuit inverse() const;

    /// Relabels qubit q as mapping[q] inside a circuit of `new_qubit_count` qubits.
    Circuit remapped(std::span<const int> mapping, int new_qubit_count) const;

  private:
    int qubit_count_;
    std::vector<Gate> gates_;
};

}  // namespace qhedr::circuit
