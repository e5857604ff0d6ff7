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

#include "qhedr/experiments/random_circuits.hpp"

#include <cmath>
#include <numbers>

namespace qhedr::experiments {

using circuit::Gate;

double normal(Rng& rng) {
    // Box-Muller; 1 - u keeps the log argument away from zero.
    const double u = 1.0 - uniform01(rng);
    const double v = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform01(rng) * (hi - lo + 1));
}

}  // namespace

circuit::Circuit random_circuit(const RandomCircuitSpec& spec, Rng& rng) {
    if (spec.min_qubits < 1 || spec.max_qubits < spec.min_qubits || spec.max_gates < 1) {
        throw ValidationError("random circuit spec is empty");
    }
    const int n = uniform_int(rng, spec.min_qubits, spec.max_qubits);
    const int count = uniform_int(rng, 1, spec.max_gates);
    circuit::Circuit c(n);
    int t_used = 0;
    while (static_cast<int>(c.size()) < count) {
        const int pick = uniform_int(rng, 0, 8);
        const int q = uniform_int(rng, 0, n - 1);
        const bool two = pick == 4 || pick == 5;
        if (two && n < 2) {
            continue;
        }
        int r = q;
        while (two && r == q) {
            r = uniform_int(rng, 0, n - 1);
        }
        const bool non_clifford = pick >= 6;
        if (non_clifford && spec.clifford_only) {
            continue;
        }
        if ((pick == 6 || pick == 7) && t_used >= spec.max_t_gates) {
            continue;
        }
        if (pick == 8 && !spec.include_ry) {
            continue;
        }
        switch (pick) {
            case 0: c.add(Gate::x(q)); break;
            case 1: c.add(Gate::z(q)); break;
            case 2: c.add(Gate::h(q)); break;
            case 3: c.add(Gate::s(q)); break;
            case 4: c.add(Gate::cnot(q, r)); break;
            case 5: c.add(Gate::swap(q, r)); break;
            case 6: c.add(Gate::t(q)); ++t_used; break;
            case 7: c.add(Gate::tdg(q)); ++t_used; break;
            default: c.add(Gate::ry(q, 2.0 * std::numbers::pi * uniform01(rng) - std::numbers::pi)); break;
        }
    }
    return c;
}

core::StateVector random_state(int n, Rng& rng) {
    CVector v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v[i] = Complex(normal(rng), normal(rng));
    }
    return core::StateVector(v / v.norm());
}

core::DensityMatrix random_density(int n, Rng& rng) {
    const Eigen::Index d = Eigen::Index{1} << n;
    CMatrix g(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            g(r, c) = Complex(normal(rng), normal(rng));
        }
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return core::DensityMatrix(0.5 * (rho + rho.adjoint()));
}

}  // namespace qhedr::experiments
