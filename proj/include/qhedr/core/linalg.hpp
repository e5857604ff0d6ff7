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

#include <span>
#include <string>
#include <vector>

#include "qhedr/core/state.hpp"

namespace qhedr::core {

/// Kronecker product; `a` occupies the high-order index (result[i*dim_b + j] = a[i]*b[j]).
CVector tensor_product(const CVector& a, const CVector& b);
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);
StateVector tensor_product(const StateVector& a, const StateVector& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

struct EigenDecomposition {
    std::vector<double> eigenvalues;      // descending
    std::vector<CVector> eigenvectors;    // orthonormal, phase-fixed
    std::vector<std::string> register_labels;

    CMatrix reconstruct() const;
};

/// Spectral decomposition of a Hermitian operator (any trace).
///
/// Eigenvalues come back in descending order. Each eigenvector has its
/// global phase fixed so the largest-magnitude component is real positive;
/// vectors sharing an eigenvalue (within 1e-9) are ordered lexicographically
/// by their (real, imag) components.
EigenDecomposition eigendecompose(const CMatrix& hermitian);
EigenDecomposition eigendecompose(const DensityMatrix& dm);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);
double fidelity(const CVector& a, const CVector& b);
/// |<a|b>|, the unsquared overlap.
double overlap(const CVector& a, const CVector& b);

/// Traces out `traced_qubits` (little-endian qubit indices). Remaining qubits
/// keep their relative order. Tracing every qubit is rejected.
CMatrix partial_trace(const CMatrix& op, std::span<const int> traced_qubits);
DensityMatrix partial_trace(const DensityMatrix& dm, std::span<const int> traced_qubits);

/// Half the trace norm of a - b.
double trace_distance(const CMatrix& a, const CMatrix& b);

/// Rotates `v` so its largest-magnitude entry is real and positive.
CVector fix_global_phase(const CVector& v);
bool equal_up_to_global_phase(const CVector& a, const CVector& b, double tol);
bool equal_up_to_global_phase(const CMatrix& a, const CMatrix& b, double tol);

}  // namespace qhedr::core
