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

#include "qhedr/core/state.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qhedr::core {

int qubits_for_dimension(std::size_t dimension) {
    if (dimension == 0 || (dimension & (dimension - 1)) != 0) {
        throw ValidationError("dimension " + std::to_string(dimension) + " is not a power of two");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dimension) {
        ++n;
    }
    return n;
}

bool is_hermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void require_hermitian(const CMatrix& m, const char* what) {
    if (m.rows() != m.cols()) {
        throw ValidationError(std::string(what) + ": matrix is not square");
    }
    if (m.size() > 0 && !is_hermitian(m)) {
        throw ValidationError(std::string(what) + ": matrix is not Hermitian");
    }
}

StateVector::StateVector(CVector amplitudes, int qubit_count, bool subnormalized)
    : amplitudes_(std::move(amplitudes)), qubit_count_(qubit_count), subnormalized_(subnormalized) {}

StateVector::StateVector(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    qubit_count_ = qubits_for_dimension(static_cast<std::size_t>(amplitudes_.size()));
    double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw ValidationError("state vector is not normalized (norm^2 = " + std::to_string(norm2) + ")");
    }
}

StateVector StateVector::basis(int qubit_count, std::uint64_t index) {
    if (qubit_count < 0 || qubit_count > 30) {
        throw ValidationError("qubit count out of range");
    }
    std::uint64_t dim = std::uint64_t{1} << qubit_count;
    if (index >= dim) {
        throw ValidationError("basis index out of range");
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(std::move(v), qubit_count, false);
}

StateVector StateVector::subnormalized(CVector amplitudes) {
    int n = qubits_for_dimension(static_cast<std::size_t>(amplitudes.size()));
    return StateVector(std::move(amplitudes), n, true);
}

StateVector StateVector::normalized() const {
    double norm = amplitudes_.norm();
    if (norm * norm < kBranchFloor) {
        throw ValidationError("cannot normalize a state with vanishing norm");
    }
    return StateVector(amplitudes_ / norm, qubit_count_, false);
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw ValidationError("density matrix must be square");
    }
    qubit_count_ = qubits_for_dimension(static_cast<std::size_t>(entries_.rows()));
    if (!is_hermitian(entries_)) {
        throw ValidationError("density matrix is not Hermitian");
    }
    Complex tr = entries_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kNormTolerance) {
        throw ValidationError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < kPsdTolerance) {
        throw ValidationError("density matrix is not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& state) {
    const CVector& v = state.amplitudes();
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int qubit_count) {
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << qubit_count);
    return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

}  // namespace qhedr::core
