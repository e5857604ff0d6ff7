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
#include <vector>

#include "json.hpp"
#include "qhedr/circuit/circuit.hpp"
#include "qhedr/qhe/key_tracker.hpp"

namespace qhedr::qhe {

/// What the server hands the client besides the quantum data: one basis
/// selector h_i per gadget and the final key as functions of a0, b0 and the
/// outcomes.
struct KeyUpdateProgram {
    int n = 0;
    std::vector<GadgetSpec> gadgets;
    std::vector<KeyPolynomial> final_a;
    std::vector<KeyPolynomial> final_b;

    std::size_t measurement_count() const { return gadgets.size(); }
    std::vector<KeyPolynomial> h_list() const;

    /// h_i may only use outcomes of gadgets 1..i-1 and key bits of qubits < n.
    bool is_causal() const;
    void check_causality() const;

    nlohmann::json to_json() const;
    static KeyUpdateProgram from_json(const nlohmann::json& j);
};

/// Symbolic sweep of `c` (qubits 0..n-1 are the encrypted data). Gates must
/// already be in the evaluation set: Clifford gates with a key rule plus
/// uncontrolled T, T-dagger, Rx, Ry, Rz, U1. Anything else is reported.
KeyUpdateProgram build_key_update_program(const circuit::Circuit& c, int n);

/// Per-gadget key bit values once all outcomes are known.
struct FinalKey {
    std::vector<int> a;
    std::vector<int> b;
};
FinalKey evaluate_final_key(const KeyUpdateProgram& p, const Bindings& bindings);

struct QuasiCompactnessMetrics {
    std::size_t measurements = 0;
    int n = 0;
    std::vector<std::size_t> h_terms;
    std::vector<std::size_t> f_terms;  // a-part then b-part, per qubit
    std::size_t xor_count = 0;
    double nlogn = 0.0;           // (M+n) log2(M+n)
    double decryption_sum = 0.0;  // sum_i log2(2n + 2(i-1)) + 2n log2(2n + 2M)
    double empirical_bound = 0.0; // 2 (M+n) log2(M+n+2)

    bool within_empirical_bound() const { return static_cast<double>(xor_count) <= empirical_bound; }
    nlohmann::json to_json() const;
};

/// XORs needed to evaluate a polynomial: one per extra term, plus one to
/// fold in a constant 1 when terms exist.
std::size_t xor_count(const KeyPolynomial& p);

QuasiCompactnessMetrics quasi_compactness_metrics(const KeyUpdateProgram& p);

}  // namespace qhedr::qhe
