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

#include "qhedr/qpce/qpce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qhedr/circuit/simulate.hpp"
#include "qhedr/core/linalg.hpp"
#include "qhedr/core/sampling.hpp"

namespace qhedr::qpce {

using circuit::Gate;

std::string interpretation_name(Interpretation i) {
    return i == Interpretation::Subtractive ? "subtractive" : "ratio";
}

Interpretation parse_interpretation(const std::string& s) {
    // "eq7" and "paper" are the command-line spellings.
    if (s == "subtractive" || s == "eq7") {
        return Interpretation::Subtractive;
    }
    if (s == "ratio" || s == "paper") {
        return Interpretation::Ratio;
    }
    throw ValidationError("unknown interpretation '" + s + "' (expected eq7/subtractive or paper/ratio)");
}

void ThresholdConfig::validate() const {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw ValidationError("tau must be a finite non-negative number");
    }
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw ValidationError("eta must be a finite positive number");
    }
}

double ThresholdConfig::ancilla_amplitude(double lambda) const {
    if (lambda <= tau || lambda <= 0.0) {
        return 0.0;
    }
    const double gap = lambda - tau;
    return interpretation == Interpretation::Subtractive ? eta * gap / lambda : eta * gap / (lambda * lambda);
}

double max_valid_eta(const ThresholdConfig& cfg, const std::vector<double>& eigenvalues) {
    ThresholdConfig unit = cfg;
    unit.eta = 1.0;
    double worst = 0.0;
    for (double l : eigenvalues) {
        worst = std::max(worst, unit.ancilla_amplitude(l));
    }
    return worst > 0.0 ? 1.0 / worst : std::numeric_limits<double>::infinity();
}

Circuit build_threshold_rotation(const ThresholdConfig& cfg, const PhaseEstimationConfig& pe,
                                 const std::vector<int>& eigen_register, int ancilla, int total_qubits) {
    cfg.validate();
    pe.validate();
    Circuit c(total_qubits);
    for (std::size_t y = 0; y < pe.slice_count(); ++y) {
        const double lambda = register_eigenvalue(y, pe);
        const double amp = cfg.ancilla_amplitude(lambda);
        if (amp > 1.0 + 1e-12) {
            throw ValidationError("eta " + std::to_string(cfg.eta) + " gives ancilla amplitude " +
                                  std::to_string(amp) + " > 1 at eigenvalue " + std::to_string(lambda));
        }
        if (amp <= 0.0) {
            continue;
        }
        const double theta = 2.0 * std::asin(std::min(amp, 1.0));
        std::vector<int> flips;
        for (std::size_t k = 0; k < eigen_register.size(); ++k) {
            if (!((y >> k) & 1U)) {
                flips.push_back(eigen_register[k]);
            }
        }
        for (int q : flips) {
            c.add(Gate::x(q));
        }
        c.add(Gate::ry(ancilla, theta).controlled_by(eigen_register));
        for (int q : flips) {
            c.add(Gate::x(q));
        }
    }
    return c;
}

Circuit build_threshold_rotation(const ThresholdConfig& cfg, int register_bits) {
    PhaseEstimationConfig pe;
    pe.precision_bits = register_bits;
    std::vector<int> reg;
    for (int k = 0; k < register_bits; ++k) {
        reg.push_back(k);
    }
    return build_threshold_rotation(cfg, pe, reg, register_bits, register_bits + 1);
}

QpceLayout qpce_layout(int n, int precision_bits) {
    QpceLayout l;
    l.n = n;
    for (int q = 0; q < n; ++q) {
        l.cols.push_back(q);
        l.rows.push_back(n + q);
    }
    for (int k = 0; k < precision_bits; ++k) {
        l.eigen.push_back(2 * n + k);
    }
    l.ancilla = 2 * n + precision_bits;
    l.total_qubits = l.ancilla + 1;
    return l;
}

namespace {

RegisterLayout pe_layout(const QpceLayout& l) {
    return {l.rows, l.eigen, l.total_qubits};
}

}  // namespace

Circuit build_qpce_circuit(const CMatrix& rho, const ThresholdConfig& cfg, const PhaseEstimationConfig& pe) {
    const int n = core::qubits_for_dimension(static_cast<std::size_t>(rho.rows()));
    const auto l = qpce_layout(n, pe.precision_bits);
    const Circuit est = build_phase_estimation(rho, pe, pe_layout(l));
    Circuit c(l.total_qubits);
    c.append(est);
    c.append(build_threshold_rotation(cfg, pe, l.eigen, l.ancilla, l.total_qubits));
    c.append(est.inverse());
    return c;
}

StateVector encode_operator(const CMatrix& rho) {
    const Eigen::Index d = rho.rows();
    CVector v(d * d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            v[r * d + c] = rho(r, c);
        }
    }
    const double norm = v.norm();
    if (norm < 1e-12) {
        throw ValidationError("cannot encode the zero operator");
    }
    return StateVector(v / norm);
}

namespace {

void require_psd(const CMatrix& rho) {
    core::require_hermitian(rho, "qpce input");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < kPsdTolerance) {
        throw ValidationError("qpce input is not positive semidefinite");
    }
}

}  // namespace

QpceResult run_qpce(const CMatrix& rho, const ThresholdConfig& cfg, const PhaseEstimationConfig& pe) {
    cfg.validate();
    pe.validate();
    require_psd(rho);
    const int n = core::qubits_for_dimension(static_cast<std::size_t>(rho.rows()));
    const auto l = qpce_layout(n, pe.precision_bits);

    QpceResult result{StateVector::zero(2 * n), 0.0, {}, 0.0, {}};
    const auto quant = quantization_report(rho, pe);
    result.max_phase_error = quant.max_phase_error;
    result.warnings = quant.warnings;

    // Data block sits on the low 2n qubits, register and ancilla start at |0>.
    const StateVector data = encode_operator(rho);
    CVector amps = CVector::Zero(Eigen::Index{1} << l.total_qubits);
    amps.head(data.amplitudes().size()) = data.amplitudes();

    const Circuit est = build_phase_estimation(rho, pe, pe_layout(l));
    const Circuit rot = build_threshold_rotation(cfg, pe, l.eigen, l.ancilla, l.total_qubits);
    for (const auto& g : est.gates()) {
        circuit::apply_gate(amps, g);
    }
    for (const auto& g : rot.gates()) {
        circuit::apply_gate(amps, g);
    }
    const auto kept = circuit::postselect(StateVector(amps / amps.norm()), l.ancilla, 1);
    result.postselect_probability = kept.probability;

    const auto probs = core::marginal_probabilities(kept.state.amplitudes(), l.eigen);
    for (std::size_t y = 0; y < probs.size(); ++y) {
        if (probs[y] > 1e-15) {
            result.register_readout[core::to_bitstring(y, pe.precision_bits)] = probs[y];
        }
    }

    CVector out = kept.state.amplitudes();
    const Circuit uncompute = est.inverse();
    for (const auto& g : uncompute.gates()) {
        circuit::apply_gate(out, g);
    }
    // Keep the branch where the register uncomputed back to |0>.
    std::vector<int> fixed = l.eigen;
    fixed.push_back(l.ancilla);
    std::vector<int> values(l.eigen.size(), 0);
    values.push_back(1);
    const double leak = 1.0 - core::marginal_probabilities(out, l.eigen)[0];
    if (leak > 1e-9) {
        result.warnings.push_back("eigen register did not uncompute cleanly; leaked weight " + std::to_string(leak));
    }
    StateVector branch = circuit::drop_qubits(StateVector::subnormalized(out), fixed, values, 1.0);
    result.output_state = branch.normalized();
    return result;
}

CVector classical_pca_oracle(const CMatrix& rho, const ThresholdConfig& cfg) {
    cfg.validate();
    require_psd(rho);
    const auto dec = core::eigendecompose(rho);
    const Eigen::Index d = rho.rows();
    CVector out = CVector::Zero(d * d);
    for (std::size_t k = 0; k < dec.eigenvalues.size(); ++k) {
        const double lambda = dec.eigenvalues[k];
        if (lambda <= cfg.tau || lambda <= 0.0) {
            continue;
        }
        const double w = cfg.interpretation == Interpretation::Subtractive ? lambda - cfg.tau
                                                                              : (lambda - cfg.tau) / lambda;
        out += w * core::tensor_product(dec.eigenvectors[k], CVector(dec.eigenvectors[k].conjugate()));
    }
    const double norm = out.norm();
    if (norm < 1e-12) {
        throw ValidationError("post-selection impossible: every eigenvalue is at or below tau");
    }
    return out / norm;
}

}  // namespace qhedr::qpce
