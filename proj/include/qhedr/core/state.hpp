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
#include <cstdint>

#include "qhedr/core/types.hpp"

namespace qhedr::core {

/// Amplitude vector over `qubit_count` qubits.
///
/// Basis index bit k holds qubit k (little-endian: qubit 0 is the least
/// significant bit). A state is normalized unless it was explicitly built
/// as a sub-normalized post-selection branch.
class StateVector {
  public:
    /// Validates length 2^n and unit norm.
    explicit StateVector(CVector amplitudes);

    static StateVector basis(int qubit_count, std::uint64_t index);
    static StateVector zero(int qubit_count) { return basis(qubit_count, 0); }
    /// Tags the amplitudes as a sub-normalized branch; only the length is checked.
    static StateVector subnormalized(CVector amplitudes);

    int qubit_count() const { return qubit_count_; }
    std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const CVector& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }
    double norm_squared() const { return amplitudes_.squaredNorm(); }
    bool is_subnormalized() const { return subnormalized_; }

    /// Rescales to unit norm. Throws when the norm is below the branch floor.
    StateVector normalized() const;

  private:
    StateVector(CVector amplitudes, int qubit_count, bool subnormalized);

    CVector amplitudes_;
    int qubit_count_ = 0;
    bool subnormalized_ = false;
};

/// Hermitian, unit-trace, positive semidefinite operator on `qubit_count` qubits.
class DensityMatrix {
  public:
    explicit DensityMatrix(CMatrix entries);

    static DensityMatrix from_pure(const StateVector& state);
    static DensityMatrix maximally_mixed(int qubit_count);

    int qubit_count() const { return qubit_count_; }
    std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
    const CMatrix& matrix() const { return entries_; }
    Complex operator()(std::size_t r, std::size_t c) const {
        return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

  private:
    CMatrix entries_;
    int qubit_count_ = 0;
};

/// log2 of a power-of-two dimension; throws otherwise.
int qubits_for_dimension(std::size_t dimension);

bool is_hermitian(const CMatrix& m, double tol = kHermitianTolerance);
/// Throws ValidationError with `what` in the message if `m` is not square Hermitian.
void require_hermitian(const CMatrix& m, const char* what);

}  // namespace qhedr::core
