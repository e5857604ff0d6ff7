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

#include "qhedr/circuit/gate.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <utility>

namespace qhedr::circuit {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 16> kNames{{
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::Sdg, "S-dagger"},
    {GateKind::T, "T"},
    {GateKind::Tdg, "T-dagger"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::Rx, "Rx"},
    {GateKind::Ry, "Ry"},
    {GateKind::Rz, "Rz"},
    {GateKind::U1, "U1"},
    {GateKind::U3, "U3"},
    {GateKind::ControlledMatrix, "controlled-matrix"},
}};

std::size_t expected_params(GateKind k) {
    switch (k) {
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::U1:
            return 1;
        case GateKind::U3:
            return 3;
        default:
            return 0;
    }
}

const Complex kI{0.0, 1.0};

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

std::string_view kind_name(GateKind kind) {
    for (const auto& [k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

GateKind parse_kind(std::string_view name) {
    for (const auto& [k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    throw ValidationError("unknown gate kind '" + std::string(name) + "'");
}

Gate Gate::single(GateKind kind, int q) {
    Gate g;
    g.kind = kind;
    g.targets = {q};
    return g;
}

Gate Gate::rotation(GateKind kind, int q, double angle) {
    Gate g = single(kind, q);
    g.params = {angle};
    return g;
}

Gate Gate::cnot(int control, int target) {
    Gate g;
    g.kind = GateKind::CNOT;
    g.targets = {target};
    g.controls = {control};
    return g;
}

Gate Gate::swap(int a, int b) {
    Gate g;
    g.kind = GateKind::SWAP;
    g.targets = {a, b};
    return g;
}

Gate Gate::u3(int q, double theta, double phi, double lambda) {
    Gate g = single(GateKind::U3, q);
    g.params = {theta, phi, lambda};
    return g;
}

Gate Gate::unitary(std::vector<int> targets, CMatrix m, std::vector<int> controls) {
    Gate g;
    g.kind = GateKind::ControlledMatrix;
    g.targets = std::move(targets);
    g.controls = std::move(controls);
    g.matrix = std::move(m);
    return g;
}

Gate Gate::controlled_by(std::vector<int> extra) const {
    Gate g = *this;
    g.controls.insert(g.controls.end(), extra.begin(), extra.end());
    return g;
}

Gate Gate::adjoint() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::S:
            g.kind = GateKind::Sdg;
            break;
        case GateKind::Sdg:
            g.kind = GateKind::S;
            break;
        case GateKind::T:
            g.kind = GateKind::Tdg;
            break;
        case GateKind::Tdg:
            g.kind = GateKind::T;
            break;
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::U1:
            g.params = {-params.at(0)};
            break;
        case GateKind::U3:
            // U3(t, p, l)^dagger = U3(-t, -l, -p)
            g.params = {-params.at(0), -params.at(2), -params.at(1)};
            break;
        case GateKind::ControlledMatrix:
            g.matrix = matrix.adjoint();
            break;
        default:
            break;
    }
    return g;
}

std::vector<int> Gate::qubits() const {
    std::vector<int> q = targets;
    q.insert(q.end(), controls.begin(), controls.end());
    return q;
}

CMatrix base_matrix(const Gate& g) {
    using std::numbers::pi;
    const double r = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::X:
        case GateKind::CNOT:
            return mat2(0, 1, 1, 0);
        case GateKind::Y:
            return mat2(0, -kI, kI, 0);
        case GateKind::Z:
            return mat2(1, 0, 0, -1);
        case GateKind::H:
            return mat2(r, r, r, -r);
        case GateKind::S:
            return mat2(1, 0, 0, kI);
        case GateKind::Sdg:
            return mat2(1, 0, 0, -kI);
        case GateKind::T:
            return mat2(1, 0, 0, std::polar(1.0, pi / 4));
        case GateKind::Tdg:
            return mat2(1, 0, 0, std::polar(1.0, -pi / 4));
        case GateKind::SWAP: {
            CMatrix m = CMatrix::Zero(4, 4);
            m(0, 0) = 1;
            m(1, 2) = 1;
            m(2, 1) = 1;
            m(3, 3) = 1;
            return m;
        }
        case GateKind::Rx: {
            double t = g.params.at(0) / 2;
            return mat2(std::cos(t), -kI * std::sin(t), -kI * std::sin(t), std::cos(t));
        }
        case GateKind::Ry: {
            double t = g.params.at(0) / 2;
            return mat2(std::cos(t), -std::sin(t), std::sin(t), std::cos(t));
        }
        case GateKind::Rz: {
            double t = g.params.at(0) / 2;
            return mat2(std::polar(1.0, -t), 0, 0, std::polar(1.0, t));
        }
        case GateKind::U1:
            return mat2(1, 0, 0, std::polar(1.0, g.params.at(0)));
        case GateKind::U3: {
            double t = g.params.at(0) / 2;
            double p = g.params.at(1);
            double l = g.params.at(2);
            return mat2(std::cos(t), -std::polar(1.0, l) * std::sin(t), std::polar(1.0, p) * std::sin(t),
                        std::polar(1.0, p + l) * std::cos(t));
        }
        case GateKind::ControlledMatrix:
            return g.matrix;
    }
    throw ValidationError("unhandled gate kind");
}

CMatrix gate_matrix(const Gate& g) {
    CMatrix base = base_matrix(g);
    const auto tdim = base.rows();
    const auto nc = static_cast<int>(g.controls.size());
    const Eigen::Index dim = tdim << nc;
    CMatrix out = CMatrix::Identity(dim, dim);
    // Controls sit above the targets in the local index, so the all-ones
    // control block is the last tdim x tdim block on the diagonal.
    const Eigen::Index offset = dim - tdim;
    out.block(offset, offset, tdim, tdim) = base;
    return out;
}

void validate(const Gate& g) {
    const auto nparams = expected_params(g.kind);
    if (g.params.size() != nparams) {
        throw ValidationError(std::string(kind_name(g.kind)) + " expects " + std::to_string(nparams) +
                              " parameter(s), got " + std::to_string(g.params.size()));
    }
    for (double p : g.params) {
        if (!std::isfinite(p)) {
            throw ValidationError(std::string(kind_name(g.kind)) + " has a non-finite parameter");
        }
    }
    std::set<int> seen;
    for (int q : g.qubits()) {
        if (q < 0) {
            throw ValidationError("negative qubit index in " + std::string(kind_name(g.kind)));
        }
        if (!seen.insert(q).second) {
            throw ValidationError("qubit " + std::to_string(q) + " used twice in " + std::string(kind_name(g.kind)));
        }
    }
    switch (g.kind) {
        case GateKind::SWAP:
            if (g.targets.size() != 2) {
                throw ValidationError("SWAP needs exactly two targets");
            }
            break;
        case GateKind::CNOT:
            if (g.targets.size() != 1 || g.controls.size() != 1) {
                throw ValidationError("CNOT needs one control and one target");
            }
            break;
        case GateKind::ControlledMatrix: {
            if (g.targets.empty()) {
                throw ValidationError("controlled-matrix needs at least one target");
            }
            const Eigen::Index dim = Eigen::Index{1} << g.targets.size();
            if (g.matrix.rows() != dim || g.matrix.cols() != dim) {
                throw ValidationError("controlled-matrix size does not match its target count");
            }
            break;
        }
        default:
            if (g.targets.size() != 1) {
                throw ValidationError(std::string(kind_name(g.kind)) + " needs exactly one target");
            }
    }
    CMatrix m = base_matrix(g);
    CMatrix id = CMatrix::Identity(m.rows(), m.cols());
    if ((m.adjoint() * m - id).cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError(std::string(kind_name(g.kind)) + " matrix is not unitary");
    }
}

std::string describe(const Gate& g) {
    std::ostringstream os;
    os << kind_name(g.kind);
    if (!g.params.empty()) {
        os << '(';
        for (std::size_t i = 0; i < g.params.size(); ++i) {
            os << (i ? "," : "") << g.params[i];
        }
        os << ')';
    }
    os << " t=[";
    for (std::size_t i = 0; i < g.targets.size(); ++i) {
        os << (i ? "," : "") << g.targets[i];
    }
    os << ']';
    if (!g.controls.empty()) {
        os << " c=[";
        for (std::size_t i = 0; i < g.controls.size(); ++i) {
            os << (i ? "," : "") << g.controls[i];
        }
        os << ']';
    }
    return os.str();
}

}  // namespace qhedr::circuit
