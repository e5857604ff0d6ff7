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

#include "qhedr/core/state.hpp"

namespace qhedr::qpce {

/// One step of density-matrix exponentiation:
/// tr_1[ e^{-iS dt} (rho (x) sigma) e^{iS dt} ] with S the swap of the two
/// factors. S^2 = I, so e^{-iS dt} = cos(dt) I - i sin(dt) S exactly.
CMatrix swap_trick_step(const CMatrix& rho, const CMatrix& sigma, double dt);
core::DensityMatrix swap_trick_step(const core::DensityMatrix& rho, const core::DensityMatrix& sigma, double dt);

/// First-order expansion sigma - i dt [rho, sigma].
CMatrix swap_trick_first_order(const CMatrix& rho, const CMatrix& sigma, double dt);

/// `steps` repetitions with dt = t / steps, consuming a fresh copy of rho each step.
CMatrix swap_trick_evolve(const CMatrix& rho, const CMatrix& sigma, double t, int steps);

/// e^{i H t} for Hermitian H, through the spectral decomposition.
CMatrix hamiltonian_exponential(const CMatrix& hermitian, double t);

}  // namespace qhedr::qpce
