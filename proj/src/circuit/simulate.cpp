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

#include "qhedr/circuit/simulate.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qhedr/core/sampling.hpp"

namespace qhedr::circuit {

void apply_gate(CVector& amplitudes, const Gate& g) {
    const CMatrix m = base_matrix(g);
    const std::size_t k = g.targets.size();
    const std::size_t sub = std::size_t{1} << k;
    const auto dim = static_cast<std::size_t>(amplitudes.size());

    std::size_t target_mask = 0;
    for (int t : g.targets) {
        target_mask |= std::size_t{1} << t;
    }
    std::size_t control_mask = 0;
    for (int c : g.controls) {
        control_mask |= std::size_t{1} << c;
    }
    if ((target_mask | control_mask) >= dim) {
        throw ValidationError("gate " + describe(g) + " exceeds the state width");
    }
    std::vector<std::size_t> offset(sub, 0);
    for (std::size_t m_idx = 0; m_idx < sub; ++m_idx) {
        for (std::size_t j = 0; j < k; ++j) {
            if ((m_idx >> j) & 1U) {
                offset[m_idx] |= std::size_t{1} << g.targets[j];
            }
        }
    }
    CVector in(static_cast<Eigen::Index>(sub));
    for (std::size_t base = 0; base < dim; ++base) {
        if ((base & target_mask) != 0 || (base & control_mask) != control_mask) {
            continue;
        }
        for (std::size_t i = 0; i < sub; ++i) {
            in[static_cast<Eigen::Index>(i)] = amplitudes[static_cast<Eigen::Index>(base | offset[i])];
        }
        for (std::size_t r = 0; r < sub; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < sub; ++c) {
                acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[static_cast<Eigen::Index>(c)];
            }
            amplitudes[static_cast<Eigen::Index>(base | offset[r])] = acc;
        }
    }
}

void apply_gate(CMatrix& rho, const Gate& g) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
        CVector col = rho.col(j);
        apply_gate(col, g);
        rho.col(j) = col;
    }
    CMatrix adj = rho.adjoint();
    for (Eigen::Index j = 0; j < adj.cols(); ++j) {
        CVector col = adj.col(j);
        apply_gate(col, g);
        adj.col(j) = col;
    }
    rho = adj.adjoint();
}

StateVector simulate_statevector(const Circuit& c, const StateVector& input) {
    if (input.qubit_count() != c.qubit_count()) {
        throw ValidationError("simulate_statevector: circuit has " + std::to_string(c.qubit_count()) +
                              " qubits but the input has " + std::to_string(input.qubit_count()));
    }
    CVector amps = input.amplitudes();
    for (const auto& g : c.gates()) {
        apply_gate(amps, g);
    }
    if (input.is_subnormalized()) {
        return StateVector::subnormalized(std::move(amps));
    }
    // Renormalize away rounding drift accumulated over long circuits.
    amps /= amps.norm();
    return StateVector(std::move(amps));
}

DensityMatrix simulate_density(const Circuit& c, const DensityMatrix& input) {
    if (input.qubit_count() != c.qubit_count()) {
        throw ValidationError("simulate_density: dimension mismatch");
    }
    CMatrix rho = input.matrix();
    for (const auto& g : c.gates()) {
        apply_gate(rho, g);
    }
    rho = 0.5 * (rho + rho.adjoint());
    return DensityMatrix(std::move(rho));
}

CMatrix circuit_unitary(const Circuit& c) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.qubit_count());
    CMatrix u = CMatrix::Identity(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        CVector col = u.col(j);
        for (const auto& g : c.gates()) {
            apply_gate(col, g);
        }
        u.col(j) = col;
    }
    return u;
}

namespace {

// Zeroes every amplitude inconsistent with `bits` on `qubits`; returns the kept weight.
double project(CVector& amps, std::span<const int> qubits, std::span<const int> bits) {
    double kept = 0.0;
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if (static_cast<int>((static_cast<std::size_t>(i) >> qubits[j]) & 1U) != bits[j]) {
                match = false;
                break;
            }
        }
        if (match) {
            kept += std::norm(amps[i]);
        } else {
            amps[i] = 0.0;
        }
    }
    return kept;
}

}  // namespace

MeasureResult measure_qubits(const StateVector& state, std::span<const int> qubits, Rng& rng) {
    std::vector<double> probs = core::marginal_probabilities(state.amplitudes(), qubits);
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    const std::size_t outcome = core::sample_index(cumulative, rng);

    std::vector<int> bits(qubits.size());
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        bits[j] = static_cast<int>((outcome >> j) & 1U);
    }
    CVector amps = state.amplitudes();
    const double p = project(amps, qubits, bits);
    if (p < kBranchFloor) {
        // Inverse-CDF sampling never lands on an empty bin; reaching here is a bug.
        throw std::logic_error("measure_qubits: sampled a zero-probability branch");
    }
    amps /= std::sqrt(p);
    return {std::move(bits), StateVector(std::move(amps)), p};
}

MeasureResult measure_qubits(const StateVector& state, std::span<const int> qubits, std::uint64_t seed) {
    Rng rng(seed);
    return measure_qubits(state, qubits, rng);
}

PostselectResult postselect(const StateVector& state, int qubit, int value) {
    if (value != 0 && value != 1) {
        throw ValidationError("postselect: value must be 0 or 1");
    }
    if (qubit < 0 || qubit >= state.qubit_count()) {
        throw ValidationError("postselect: qubit index out of range");
    }
    CVector amps = state.amplitudes();
    const int q[1] = {qubit};
    const int b[1] = {value};
    const double p = project(amps, q, b) / state.norm_squared();
    if (p < kBranchFloor) {
        throw ValidationError("post-selection impossible: branch probability " + std::to_string(p));
    }
    amps /= amps.norm();
    return {StateVector(std::move(amps)), p};
}

StateVector drop_qubits(const StateVector& state, std::span<const int> qubits, std::span<const int> values,
                        double tol) {
    if (qubits.size() != values.size()) {
        throw ValidationError("drop_qubits: qubit and value lists differ in length");
    }
    const int n = state.qubit_count();
    std::size_t fixed_mask = 0;
    std::size_t fixed_bits = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        if (qubits[j] < 0 || qubits[j] >= n) {
            throw ValidationError("drop_qubits: qubit index out of range");
        }
        fixed_mask |= std::size_t{1} << qubits[j];
        if (values[j]) {
            fixed_bits |= std::size_t{1} << qubits[j];
        }
    }
    std::vector<int> kept;
    for (int q = 0; q < n; ++q) {
        if (!((fixed_mask >> q) & 1U)) {
            kept.push_back(q);
        }
    }
    CVector out = CVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << kept.size()));
    double stray = 0.0;
    for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if ((idx & fixed_mask) != fixed_bits) {
            stray += std::norm(state.amplitudes()[i]);
            continue;
        }
        std::size_t compact = 0;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if ((idx >> kept[k]) & 1U) {
                compact |= std::size_t{1} << k;
            }
        }
        out[static_cast<Eigen::Index>(compact)] = state.amplitudes()[i];
    }
    if (stray > tol) {
        throw ValidationError("drop_qubits: state has weight " + std::to_string(stray) +
                              " outside the fixed subspace");
    }
    if (state.is_subnormalized()) {
        return StateVector::subnormalized(std::move(out));
    }
    out /= out.norm();
    return StateVector(std::move(out));
}

}  // namespace qhedr::circuit
