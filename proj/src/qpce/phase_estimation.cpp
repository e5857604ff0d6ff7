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

#include "qhedr/qpce/phase_estimation.hpp"

#include <cmath>
#include <sstream>

#include "qhedr/core/state.hpp"
#include "qhedr/qpce/swap_trick.hpp"

namespace qhedr::qpce {

using circuit::Gate;

void PhaseEstimationConfig::validate() const {
    if (precision_bits < 1 || precision_bits > 10) {
        throw ValidationError("precision_bits must be in [1, 10]");
    }
    if (!(evolution_time > 0.0) || !std::isfinite(evolution_time)) {
        throw ValidationError("evolution_time must be positive and finite");
    }
}

RegisterLayout default_layout(int system_qubits, int precision_bits) {
    RegisterLayout l;
    for (int q = 0; q < system_qubits; ++q) {
        l.system.push_back(q);
    }
    for (int k = 0; k < precision_bits; ++k) {
        l.eigen.push_back(system_qubits + k);
    }
    l.total_qubits = system_qubits + precision_bits;
    return l;
}

Circuit build_qft(const std::vector<int>& qubits, int total_qubits) {
    const int t = static_cast<int>(qubits.size());
    Circuit c(total_qubits);
    for (int m = t - 1; m >= 0; --m) {
        c.add(Gate::h(qubits[static_cast<std::size_t>(m)]));
        for (int l = m - 1; l >= 0; --l) {
            const double angle = std::numbers::pi / static_cast<double>(1 << (m - l));
            c.add(Gate::u1(qubits[static_cast<std::size_t>(m)], angle).controlled_by({qubits[static_cast<std::size_t>(l)]}));
        }
    }
    for (int i = 0; i < t / 2; ++i) {
        c.add(Gate::swap(qubits[static_cast<std::size_t>(i)], qubits[static_cast<std::size_t>(t - 1 - i)]));
    }
    return c;
}

Circuit build_inverse_qft(const std::vector<int>& qubits, int total_qubits) {
    return build_qft(qubits, total_qubits).inverse();
}

Circuit build_phase_estimation(const CMatrix& rho, const PhaseEstimationConfig& cfg, const RegisterLayout& layout) {
    cfg.validate();
    core::require_hermitian(rho, "phase estimation operator");
    if (static_cast<int>(layout.eigen.size()) != cfg.precision_bits) {
        throw ValidationError("register layout width differs from precision_bits");
    }
    const int n = core::qubits_for_dimension(static_cast<std::size_t>(rho.rows()));
    if (static_cast<int>(layout.system.size()) != n) {
        throw ValidationError("register layout system width differs from the operator");
    }
    Circuit c(layout.total_qubits);
    for (int q : layout.eigen) {
        c.add(Gate::h(q));
    }
    const double slice = cfg.evolution_time / static_cast<double>(cfg.slice_count());
    for (int k = 0; k < cfg.precision_bits; ++k) {
        const double t = slice * static_cast<double>(std::size_t{1} << k);
        c.add(Gate::unitary(layout.system, hamiltonian_exponential(rho, t), {layout.eigen[static_cast<std::size_t>(k)]}));
    }
    c.append(build_inverse_qft(layout.eigen, layout.total_qubits));
    return c;
}

Circuit build_phase_estimation(const CMatrix& rho, const PhaseEstimationConfig& cfg) {
    const int n = core::qubits_for_dimension(static_cast<std::size_t>(rho.rows()));
    return build_phase_estimation(rho, cfg, default_layout(n, cfg.precision_bits));
}

QuantizationReport quantization_report(const CMatrix& rho, const PhaseEstimationConfig& cfg) {
    cfg.validate();
    core::require_hermitian(rho, "phase estimation operator");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    QuantizationReport r;
    const double slots = static_cast<double>(cfg.slice_count());
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const double lambda = es.eigenvalues()[k];
        const double y = lambda * cfg.evolution_time / (2.0 * std::numbers::pi);
        const double err = std::abs(y - std::round(y));
        r.max_phase_error = std::max(r.max_phase_error, err);
        std::ostringstream os;
        if (err > 1e-9) {
            os << "eigenvalue " << lambda << " sits between register values (phase error " << err << ")";
            r.warnings.push_back(os.str());
        } else if (std::round(y) < 0.0 || std::round(y) >= slots) {
            os << "eigenvalue " << lambda << " wraps around a " << cfg.precision_bits << "-bit register";
            r.warnings.push_back(os.str());
        }
    }
    return r;
}

}  // namespace qhedr::qpce
