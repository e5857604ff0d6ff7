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

#include <vector>

#include "qhedr/circuit/gate.hpp"
#include "qhedr/qhe/key_polynomial.hpp"

namespace qhedr::qhe {

using circuit::Gate;
using circuit::GateKind;

/// Which correction the client folds into gadget i's Bell measurement.
enum class GadgetType { T, Tdg, Rz, Rx, Ry };

/// A non-Clifford gate evaluated through a teleportation gadget.
///
/// The server applies `gate` to the encrypted data and swaps the result
/// into the gadget's Bell half. When h evaluates to 1 the client first
/// rotates that half by basis(); the Bell outcome then updates the key.
///
/// T / T-dagger: basis S / S-dagger, h = a, key (a, b) -> (a+ra, a+b+rb).
/// Rotations R(theta) anticommute their angle through X^a Z^b whenever the
/// selector h is 1 (Rz: a, Rx: b, Ry: a+b); basis R(-2 theta) restores the
/// sign and the key becomes (a+ra, b+rb).
struct GadgetSpec {
    int index = 0;  // 1-based
    int data_qubit = 0;
    GadgetType type = GadgetType::T;
    Gate gate;
    double angle = 0.0;
    KeyPolynomial h;

    Gate basis(int qubit) const;
};

std::string gadget_type_name(GadgetType t);
GadgetType parse_gadget_type(const std::string& s);

/// Kinds the symbolic sweep handles without a gadget (CZ is Z with one control).
bool is_clifford_gate(const Gate& g);
/// Single-qubit, uncontrolled T, T-dagger, Rx, Ry, Rz or U1.
bool is_gadget_gate(const Gate& g);

/// Symbolic Pauli frame: for each data qubit the current (a, b) as affine
/// forms over the initial key and the Bell outcomes seen so far.
class KeyTracker {
  public:
    explicit KeyTracker(int n);

    /// Conjugates the frame through a Clifford gate. Throws for anything else.
    void apply_clifford(const Gate& g);
    /// Registers the next gadget for `g` and updates the frame.
    const GadgetSpec& apply_gadget(const Gate& g);
    /// Dispatches to one of the two above.
    void apply(const Gate& g);

    int qubit_count() const { return static_cast<int>(a_.size()); }
    const KeyPolynomial& a(int q) const { return a_.at(static_cast<std::size_t>(q)); }
    const KeyPolynomial& b(int q) const { return b_.at(static_cast<std::size_t>(q)); }
    const std::vector<KeyPolynomial>& a() const { return a_; }
    const std::vector<KeyPolynomial>& b() const { return b_; }
    const std::vector<GadgetSpec>& gadgets() const { return gadgets_; }

  private:
    void check_qubit(int q) const;

    std::vector<KeyPolynomial> a_;
    std::vector<KeyPolynomial> b_;
    std::vector<GadgetSpec> gadgets_;
};

}  // namespace qhedr::qhe
