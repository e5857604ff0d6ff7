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
#include <string>
#include <vector>

#include "qhedr/core/state.hpp"
#include "qhedr/qpce/phase_estimation.hpp"

namespace qhedr::qpce {

using core::StateVector;

enum class Interpretation {
    /// Component weights (lambda - tau)_+ on |e_k>|v_k>.
    Subtractive,
    /// Component weights (lambda - tau)_+ / lambda, the ratio the reference run targets.
    Ratio,
};

std::string interpretation_name(Interpretation i);
Interpretation parse_interpretation(const std::string& s);  // "subtractive" | "ratio", or "eq7" | "paper"

struct ThresholdConfig {
    double tau = 0.0;
    double eta = 1.0;
    Interpretation interpretation = Interpretation::Subtractive;

    void validate() const;
    /// |1> amplitude the ancilla rotation gives an eigenvalue lambda.
    double ancilla_amplitude(double lambda) const;
};

/// Largest eta keeping every ancilla amplitude <= 1 over the given eigenvalues.
double max_valid_eta(const ThresholdConfig& cfg, const std::vector<double>& eigenvalues);

/// Ancilla rotation conditioned on the eigen register: for every register
/// value y the ancilla gets Ry(theta_y) with sin(theta_y / 2) equal to the
/// ancilla amplitude of lambda_y = 2 pi y / t0. Throws if eta pushes any
/// amplitude above 1.
Circuit build_threshold_rotation(const ThresholdConfig& cfg, const PhaseEstimationConfig& pe,
                                 const std::vector<int>& eigen_register, int ancilla, int total_qubits);
Circuit build_threshold_rotation(const ThresholdConfig& cfg, int register_bits);

struct QpceResult {
    StateVector output_state;  // data register, vec(rho) layout: row qubits high
    double postselect_probability = 0.0;
    std::map<std::string, double> register_readout;
    double max_phase_error = 0.0;
    std::vector<std::string> warnings;
};

/// Qubit layout used by run_qpce for an operator on n qubits:
/// columns 0..n-1, rows n..2n-1, eigen register 2n..2n+t-1, ancilla 2n+t.
struct QpceLayout {
    int n = 0;
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<int> eigen;
    int ancilla = 0;
    int total_qubits = 0;
};
QpceLayout qpce_layout(int n, int precision_bits);

/// Phase estimation, threshold rotation, inverse phase estimation.
Circuit build_qpce_circuit(const CMatrix& rho, const ThresholdConfig& cfg, const PhaseEstimationConfig& pe);

/// Runs the pipeline on vec(rho) and post-selects the ancilla on |1>.
/// rho may be any Hermitian positive semidefinite operator; the trace only
/// sets the eigenvalue scale the register reads.
QpceResult run_qpce(const CMatrix& rho, const ThresholdConfig& cfg, const PhaseEstimationConfig& pe = {});

/// Normalized sum_k w_k v_k (x) conj(v_k) from a direct eigendecomposition.
CVector classical_pca_oracle(const CMatrix& rho, const ThresholdConfig& cfg);

/// Row-major vec(rho) as a normalized state on 2n qubits.
StateVector encode_operator(const CMatrix& rho);

}  // namespace qhedr::qpce
