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

#include "qhedr/qhe/pauli_key.hpp"

#include <atomic>
#include <string>

namespace qhedr::qhe {

namespace {

std::uint64_t next_key_id() {
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
}

void check_bits(std::span<const int> bits) {
    for (int x : bits) {
        if (x != 0 && x != 1) {
            throw ValidationError("key bits must be 0 or 1");
        }
    }
}

void check_size(const DensityMatrix& m, const PauliKey& k) {
    if (k.a.size() != k.b.size()) {
        throw ValidationError("key halves differ in length");
    }
    if (m.qubit_count() != k.qubit_count()) {
        throw ValidationError("key covers " + std::to_string(k.qubit_count()) + " qubits but the state has " +
                              std::to_string(m.qubit_count()));
    }
}

}  // namespace

PauliKey PauliKey::fixed(std::vector<int> a, std::vector<int> b) {
    if (a.size() != b.size()) {
        throw ValidationError("key halves differ in length");
    }
    check_bits(a);
    check_bits(b);
    return {std::move(a), std::move(b), next_key_id()};
}

PauliKey keygen(int n, Rng& rng) {
    if (n < 1) {
        throw ValidationError("keygen needs at least one qubit");
    }
    std::vector<int> a(static_cast<std::size_t>(n));
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        // One draw per bit keeps the stream layout obvious.
        a[static_cast<std::size_t>(q)] = static_cast<int>(rng() >> 63);
        b[static_cast<std::size_t>(q)] = static_cast<int>(rng() >> 63);
    }
    return PauliKey::fixed(std::move(a), std::move(b));
}

PauliKey keygen(int n, std::uint64_t seed) {
    Rng rng(seed);
    return keygen(n, rng);
}

CMatrix pauli_operator(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) {
        throw ValidationError("key halves differ in length");
    }
    const std::size_t dim = std::size_t{1} << a.size();
    std::size_t xmask = 0;
    std::size_t zmask = 0;
    for (std::size_t q = 0; q < a.size(); ++q) {
        xmask |= static_cast<std::size_t>(a[q] & 1) << q;
        zmask |= static_cast<std::size_t>(b[q] & 1) << q;
    }
    // (X^a Z^b)|i> = (-1)^{popcount(i & zmask)} |i ^ xmask>
    CMatrix p = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        const double sign = (__builtin_popcountll(i & zmask) & 1) ? -1.0 : 1.0;
        p(static_cast<Eigen::Index>(i ^ xmask), static_cast<Eigen::Index>(i)) = sign;
    }
    return p;
}

DensityMatrix qotp_encrypt(const DensityMatrix& rho, const PauliKey& k) {
    check_size(rho, k);
    const CMatrix p = pauli_operator(k.a, k.b);
    return DensityMatrix(p * rho.matrix() * p.adjoint());
}

DensityMatrix qotp_decrypt(const DensityMatrix& phi, const PauliKey& k) {
    check_size(phi, k);
    const CMatrix p = pauli_operator(k.a, k.b);
    return DensityMatrix(p.adjoint() * phi.matrix() * p);
}

std::vector<circuit::Gate> pauli_gates(std::span<const int> a, std::span<const int> b, std::span<const int> qubits) {
    if (a.size() != qubits.size() || b.size() != qubits.size()) {
        throw ValidationError("key length differs from the qubit list");
    }
    std::vector<circuit::Gate> out;
    for (std::size_t q = 0; q < qubits.size(); ++q) {
        if (b[q]) {
            out.push_back(circuit::Gate::z(qubits[q]));
        }
        if (a[q]) {
            out.push_back(circuit::Gate::x(qubits[q]));
        }
    }
    return out;
}

}  // namespace qhedr::qhe
