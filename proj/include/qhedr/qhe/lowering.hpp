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

#include "qhedr/circuit/circuit.hpp"

namespace qhedr::qhe {

/// Rewrites a circuit into the gate set the encrypted evaluation handles:
/// Clifford gates with key rules (X, Y, Z, H, S, S-dagger, CNOT, CZ, SWAP)
/// plus uncontrolled T, T-dagger, Rx, Ry, Rz and U1. The result equals the
/// input up to a global phase.
///
///   U3 and single-target matrices   -> Rz Ry Rz
///   singly controlled 1-qubit gates -> ABC construction around two CNOTs
///   doubly controlled Ry            -> four Ry(+-theta/4) and four CNOTs
///   rotations by multiples of pi/4  -> Clifford+T, zero angles dropped
///
/// Multi-target controlled matrices and wider control sets are rejected.
circuit::Circuit lower_for_evaluation(const circuit::Circuit& c);

/// Number of gadgets (non-Clifford gates) a lowered circuit needs.
std::size_t gadget_count(const circuit::Circuit& lowered);

}  // namespace qhedr::qhe
