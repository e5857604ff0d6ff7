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

#include <string>
#include <string_view>
#include <vector>

#include "qhedr/core/types.hpp"

namespace qhedr::circuit {

enum class GateKind {
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    CNOT,
    SWAP,
    Rx,
    Ry,
    Rz,
    U1,
    U3,
    ControlledMatrix,
};

/// Interchange name ("X", "S-dagger", "controlled-matrix", ...).
std::string_view kind_name(GateKind kind);
/// Inverse of kind_name. Throws ValidationError for unknown names.
GateKind parse_kind(std::string_view name);

/// One circuit instruction.
///
/// Any kind may carry extra `controls`; the base action only fires when
/// every control qubit is 1. CNOT is X on `targets[0]` with exactly one
/// control. For ControlledMatrix, `matrix` is the unitary on `targets` with
/// local bit k of its index mapped to targets[k].
///
/// Rotation conventions (radians):
///   Rx(t) = exp(-i t X / 2), Ry(t) = exp(-i t Y / 2), Rz(t) = exp(-i t Z / 2)
///   U1(l) = diag(1, e^{il})
///   U3(t, p, l) = [[cos(t/2), -e^{il} sin(t/2)], [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]]
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<double> params;
    std::vector<int> targets;
    std::vector<int> controls;
    CMatrix matrix;

    static Gate x(int q) { return single(GateKind::X, q); }
    static Gate y(int q) { return single(GateKind::Y, q); }
    static Gate z(int q) { return single(GateKind::Z, q); }
    static Gate h(int q) { return single(GateKind::H, q); }
    static Gate s(int q) { return single(GateKind::S, q); }
    static Gate sdg(int q) { return single(GateKind::Sdg, q); }
    static Gate t(int q) { return single(GateKind::T, q); }
    static Gate tdg(int q) { return single(GateKind::Tdg, q); }
    static Gate cnot(int control, int target);
    static Gate swap(int a, int b);
    static Gate rx(int q, double theta) { return rotation(GateKind::Rx, q, theta); }
    static Gate ry(int q, double theta) { return rotation(GateKind::Ry, q, theta); }
    static Gate rz(int q, double theta) { return rotation(GateKind::Rz, q, theta); }
    static Gate u1(int q, double lambda) { return rotation(GateKind::U1, q, lambda); }
    static Gate u3(int q, double theta, double phi, double lambda);
    static Gate unitary(std::vector<int> targets, CMatrix m, std::vector<int> controls = {});

    /// Copy with `extra` appended to the control list.
    Gate controlled_by(std::vector<int> extra) const;
    /// Hermitian adjoint as a gate of the same shape.
    Gate adjoint() const;
    /// Every qubit the gate touches, targets first.
    std::vector<int> qubits() const;

    bool is_t_type() const { return kind == GateKind::T || kind == GateKind::Tdg; }

  private:
    static Gate single(GateKind kind, int q);
    static Gate rotation(GateKind kind, int q, double angle);
};

/// Checks qubit disjointness, arity, parameter count and unitarity.
void validate(const Gate& g);

/// Unitary acting on the gate's targets only.
CMatrix base_matrix(const Gate& g);

/// Dense unitary over the gate's own qubits, ordered targets then controls
/// (local bit k -> qubits()[k]).
CMatrix gate_matrix(const Gate& g);

std::string describe(const Gate& g);

}  // namespace qhedr::circuit
