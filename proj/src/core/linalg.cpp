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

#include "qhedr/core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <Eigen/Eigenvalues>

namespace qhedr::core {

CVector tensor_product(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return out;
}

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    CVector v = tensor_product(a.amplitudes(), b.amplitudes());
    if (a.is_subnormalized() || b.is_subnormalized()) {
        return StateVector::subnormalized(std::move(v));
    }
    return StateVector(std::move(v));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(tensor_product(a.matrix(), b.matrix()));
}

CMatrix EigenDecomposition::reconstruct() const {
    if (eigenvectors.empty()) {
        return CMatrix();
    }
    auto dim = eigenvectors.front().size();
    CMatrix out = CMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
        out += eigenvalues[k] * eigenvectors[k] * eigenvectors[k].adjoint();
    }
    return out;
}

CVector fix_global_phase(const CVector& v) {
    if (v.size() == 0) {
        return v;
    }
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        // Strictly greater keeps the first index among near-equal magnitudes.
        if (std::abs(v[i]) > best_mag + 1e-12) {
            best_mag = std::abs(v[i]);
            best = i;
        }
    }
    if (best_mag <= 0.0) {
        return v;
    }
    Complex phase = std::conj(v[best]) / best_mag;
    return v * phase;
}

namespace {

bool lexicographically_less(const CVector& a, const CVector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a[i].real() - b[i].real()) > 1e-12) {
            return a[i].real() < b[i].real();
        }
        if (std::abs(a[i].imag() - b[i].imag()) > 1e-12) {
            return a[i].imag() < b[i].imag();
        }
    }
    return false;
}

std::string binary_label(std::size_t k, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b) {
        if ((k >> b) & 1U) {
            s[static_cast<std::size_t>(width - 1 - b)] = '1';
        }
    }
    return s;
}

}  // namespace

EigenDecomposition eigendecompose(const CMatrix& hermitian) {
    require_hermitian(hermitian, "eigendecompose");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
    if (solver.info() != Eigen::Success) {
        throw ValidationError("eigendecompose: solver did not converge");
    }
    const auto n = static_cast<std::size_t>(hermitian.rows());
    struct Pair {
        double value;
        CVector vector;
    };
    std::vector<Pair> pairs;
    pairs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        pairs.push_back({solver.eigenvalues()[static_cast<Eigen::Index>(k)],
                         fix_global_phase(solver.eigenvectors().col(static_cast<Eigen::Index>(k)))});
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (std::abs(a.value - b.value) > 1e-9) {
            return a.value > b.value;
        }
        return lexicographically_less(a.vector, b.vector);
    });

    int width = 0;
    while ((std::size_t{1} << width) < n) {
        ++width;
    }
    EigenDecomposition out;
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues.push_back(pairs[k].value);
        out.eigenvectors.push_back(std::move(pairs[k].vector));
        out.register_labels.push_back(binary_label(k, std::max(width, 1)));
    }
    return out;
}

EigenDecomposition eigendecompose(const DensityMatrix& dm) { return eigendecompose(dm.matrix()); }

double overlap(const CVector& a, const CVector& b) {
    if (a.size() != b.size()) {
        throw ValidationError("overlap: dimension mismatch");
    }
    return std::abs(a.dot(b));
}

double fidelity(const CVector& a, const CVector& b) {
    double o = overlap(a, b);
    return std::min(1.0, o * o);
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.dimension() != b.dimension()) {
        throw ValidationError("fidelity: dimension mismatch");
    }
    return fidelity(a.amplitudes(), b.amplitudes());
}

CMatrix partial_trace(const CMatrix& op, std::span<const int> traced_qubits) {
    if (op.rows() != op.cols()) {
        throw ValidationError("partial_trace: operator must be square");
    }
    const int n = qubits_for_dimension(static_cast<std::size_t>(op.rows()));
    std::set<int> traced(traced_qubits.begin(), traced_qubits.end());
    if (traced.size() != traced_qubits.size()) {
        throw ValidationError("partial_trace: duplicate qubit index");
    }
    for (int q : traced) {
        if (q < 0 || q >= n) {
            throw ValidationError("partial_trace: qubit index out of range");
        }
    }
    if (static_cast<int>(traced.size()) == n) {
        throw ValidationError("partial_trace: tracing every qubit leaves a scalar");
    }
    std::vector<int> kept;
    std::vector<int> gone(traced.begin(), traced.end());
    for (int q = 0; q < n; ++q) {
        if (!traced.count(q)) {
            kept.push_back(q);
        }
    }
    auto spread = [](std::size_t bits, const std::vector<int>& positions) {
        std::size_t out = 0;
        for (std::size_t k = 0; k < positions.size(); ++k) {
            if ((bits >> k) & 1U) {
                out |= std::size_t{1} << positions[k];
            }
        }
        return out;
    };
    const std::size_t kdim = std::size_t{1} << kept.size();
    const std::size_t tdim = std::size_t{1} << gone.size();
    std::vector<std::size_t> kidx(kdim);
    std::vector<std::size_t> tidx(tdim);
    for (std::size_t i = 0; i < kdim; ++i) {
        kidx[i] = spread(i, kept);
    }
    for (std::size_t t = 0; t < tdim; ++t) {
        tidx[t] = spread(t, gone);
    }
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(kdim), static_cast<Eigen::Index>(kdim));
    for (std::size_t i = 0; i < kdim; ++i) {
        for (std::size_t j = 0; j < kdim; ++j) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < tdim; ++t) {
                acc += op(static_cast<Eigen::Index>(kidx[i] | tidx[t]), static_cast<Eigen::Index>(kidx[j] | tidx[t]));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& dm, std::span<const int> traced_qubits) {
    return DensityMatrix(partial_trace(dm.matrix(), traced_qubits));
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("trace_distance: dimension mismatch");
    }
    CMatrix diff = a - b;
    diff = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(diff, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

bool equal_up_to_global_phase(const CVector& a, const CVector& b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    return (fix_global_phase(a) - fix_global_phase(b)).cwiseAbs().maxCoeff() <= tol;
}

bool equal_up_to_global_phase(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(a(r, c)) < 1e-15 || std::abs(b(r, c)) < 1e-15) {
        return (a - b).cwiseAbs().maxCoeff() <= tol;
    }
    Complex phase = (b(r, c) / std::abs(b(r, c))) / (a(r, c) / std::abs(a(r, c)));
    return (a * phase - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qhedr::core
