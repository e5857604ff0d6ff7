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

#include "qhedr/qpce/swap_trick.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "qhedr/core/linalg.hpp"

namespace qhedr::qpce {

namespace {

CMatrix swap_operator(Eigen::Index d) {
    CMatrix s = CMatrix::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            s(j * d + i, i * d + j) = 1.0;
        }
    }
    return s;
}

}  // namespace

CMatrix swap_trick_step(const CMatrix& rho, const CMatrix& sigma, double dt) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols() || rho.rows() != rho.cols()) {
        throw ValidationError("swap_trick_step: rho and sigma must be square and equally sized");
    }
    const Eigen::Index d = rho.rows();
    const int n = core::qubits_for_dimension(static_cast<std::size_t>(d));
    const CMatrix joint = core::tensor_product(rho, sigma);
    const CMatrix u = std::cos(dt) * CMatrix::Identity(d * d, d * d) - Complex(0, std::sin(dt)) * swap_operator(d);
    const CMatrix evolved = u * joint * u.adjoint();
    // rho is the high factor; trace out its qubits.
    std::vector<int> traced(static_cast<std::size_t>(n));
    std::iota(traced.begin(), traced.end(), n);
    return core::partial_trace(evolved, traced);
}

core::DensityMatrix swap_trick_step(const core::DensityMatrix& rho, const core::DensityMatrix& sigma, double dt) {
    CMatrix out = swap_trick_step(rho.matrix(), sigma.matrix(), dt);
    out = 0.5 * (out + out.adjoint());
    return core::DensityMatrix(std::move(out));
}

CMatrix swap_trick_first_order(const CMatrix& rho, const CMatrix& sigma, double dt) {
    return sigma - Complex(0, dt) * (rho * sigma - sigma * rho);
}

CMatrix swap_trick_evolve(const CMatrix& rho, const CMatrix& sigma, double t, int steps) {
    if (steps < 1) {
        throw ValidationError("swap_trick_evolve needs at least one step");
    }
    const double dt = t / steps;
    CMatrix s = sigma;
    for (int k = 0; k < steps; ++k) {
        s = swap_trick_step(rho, s, dt);
    }
    return s;
}

CMatrix hamiltonian_exponential(const CMatrix& hermitian, double t) {
    core::require_hermitian(hermitian, "hamiltonian_exponential input");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian);
    const auto& v = es.eigenvectors();
    CVector phases(v.cols());
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
        phases[k] = std::polar(1.0, es.eigenvalues()[k] * t);
    }
    return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace qhedr::qpce
