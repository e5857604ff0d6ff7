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

#include "qhedr/qhe/lowering.hpp"

#include <cmath>
#include <numbers>

#include "qhedr/qhe/key_tracker.hpp"

namespace qhedr::qhe {

namespace {

using circuit::Circuit;
using std::numbers::pi;

constexpr double kAngleTol = 1e-12;

double wrap(double angle, double period) {
    double r = std::fmod(angle, period);
    if (r < 0) {
        r += period;
    }
    return r;
}

/// Index k with angle = k * step (mod period), or -1.
int multiple_of(double angle, double step, double period) {
    const double r = wrap(angle, period);
    const double k = std::round(r / step);
    if (std::abs(r - k * step) > kAngleTol) {
        return -1;
    }
    return static_cast<int>(k) % static_cast<int>(std::lround(period / step));
}

void emit_phase(std::vector<Gate>& out, int q, double angle) {
    // Rz and U1 agree up to a global phase; both are periodic in 2 pi then.
    const int k = multiple_of(angle, pi / 4, 2 * pi);
    if (k < 0) {
        out.push_back(Gate::rz(q, angle));
        return;
    }
    switch (k) {
        case 0:
            break;
        case 1:
            out.push_back(Gate::t(q));
            break;
        case 2:
            out.push_back(Gate::s(q));
            break;
        case 3:
            out.push_back(Gate::s(q));
            out.push_back(Gate::t(q));
            break;
        case 4:
            out.push_back(Gate::z(q));
            break;
        case 5:
            out.push_back(Gate::z(q));
            out.push_back(Gate::t(q));
            break;
        case 6:
            out.push_back(Gate::sdg(q));
            break;
        default:
            out.push_back(Gate::tdg(q));
            break;
    }
}

void emit_ry(std::vector<Gate>& out, int q, double angle) {
    // Ry is 4 pi periodic but -I is a global phase, so work mod 2 pi.
    switch (multiple_of(angle, pi / 2, 2 * pi)) {
        case 0:
            return;
        case 1:  // Ry(pi/2) = X H
            out.push_back(Gate::h(q));
            out.push_back(Gate::x(q));
            return;
        case 2:
            out.push_back(Gate::y(q));
            return;
        case 3:  // Ry(-pi/2) = H X
            out.push_back(Gate::x(q));
            out.push_back(Gate::h(q));
            return;
        default:
            out.push_back(Gate::ry(q, angle));
    }
}

void emit_rx(std::vector<Gate>& out, int q, double angle) {
    switch (multiple_of(angle, pi / 2, 2 * pi)) {
        case 0:
            return;
        case 1:  // Rx(pi/2) = H S H up to phase
            out.push_back(Gate::h(q));
            out.push_back(Gate::s(q));
            out.push_back(Gate::h(q));
            return;
        case 2:
            out.push_back(Gate::x(q));
            return;
        case 3:
            out.push_back(Gate::h(q));
            out.push_back(Gate::sdg(q));
            out.push_back(Gate::h(q));
            return;
        default:
            out.push_back(Gate::rx(q, angle));
    }
}

struct Zyz {
    double alpha = 0;  // global phase
    double beta = 0;
    double gamma = 0;
    double delta = 0;
};

/// U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
Zyz zyz(const CMatrix& u) {
    const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    Zyz z;
    z.alpha = std::arg(det) / 2;
    const CMatrix v = u * std::polar(1.0, -z.alpha);  // special unitary
    const Complex a = v(0, 0);
    const Complex b = v(1, 0);
    z.gamma = 2 * std::atan2(std::abs(b), std::abs(a));
    // a = e^{-i(beta+delta)/2} cos, b = e^{i(beta-delta)/2} sin
    const double sum = std::abs(a) > 1e-14 ? -2 * std::arg(a) : 0.0;
    const double diff = std::abs(b) > 1e-14 ? 2 * std::arg(b) : 0.0;
    z.beta = (sum + diff) / 2;
    z.delta = (sum - diff) / 2;
    return z;
}

void emit_single(std::vector<Gate>& out, int q, const CMatrix& u) {
    const Zyz z = zyz(u);
    emit_phase(out, q, z.delta);
    emit_ry(out, q, z.gamma);
    emit_phase(out, q, z.beta);
}

void emit_controlled(std::vector<Gate>& out, int c, int t, const CMatrix& u) {
    // U = e^{ia} A X B X C with A B C = I (Nielsen and Chuang, section 4.3).
    const Zyz z = zyz(u);
    emit_phase(out, t, (z.delta - z.beta) / 2);  // C
    out.push_back(Gate::cnot(c, t));
    emit_phase(out, t, -(z.delta + z.beta) / 2);  // B
    emit_ry(out, t, -z.gamma / 2);
    out.push_back(Gate::cnot(c, t));
    emit_ry(out, t, z.gamma / 2);  // A
    emit_phase(out, t, z.beta);
    emit_phase(out, c, z.alpha);  // U1(alpha) on the control, as Rz up to phase
}

void lower_gate(std::vector<Gate>& out, const Gate& g) {
    using circuit::GateKind;
    const auto nc = g.controls.size();
    if (nc == 0) {
        switch (g.kind) {
            case GateKind::Rz:
            case GateKind::U1:
                emit_phase(out, g.targets[0], g.params[0]);
                return;
            case GateKind::Ry:
                emit_ry(out, g.targets[0], g.params[0]);
                return;
            case GateKind::Rx:
                emit_rx(out, g.targets[0], g.params[0]);
                return;
            case GateKind::U3:
            case GateKind::ControlledMatrix:
                if (g.targets.size() != 1) {
                    throw ValidationError("cannot lower multi-target gate " + circuit::describe(g));
                }
                emit_single(out, g.targets[0], circuit::base_matrix(g));
                return;
            default:
                out.push_back(g);
                return;
        }
    }
    if (g.kind == GateKind::CNOT || (g.kind == GateKind::X && nc == 1)) {
        out.push_back(Gate::cnot(g.controls[0], g.targets[0]));
        return;
    }
    if (g.kind == GateKind::Z && nc == 1) {
        out.push_back(g);
        return;
    }
    if (g.targets.size() != 1) {
        throw ValidationError("cannot lower multi-target gate " + circuit::describe(g));
    }
    const int t = g.targets[0];
    if (nc == 1) {
        emit_controlled(out, g.controls[0], t, circuit::base_matrix(g));
        return;
    }
    if (nc == 2 && g.kind == GateKind::Ry) {
        const double q = g.params[0] / 4;
        const int c1 = g.controls[0];
        const int c2 = g.controls[1];
        emit_ry(out, t, q);
        out.push_back(Gate::cnot(c1, t));
        emit_ry(out, t, -q);
        out.push_back(Gate::cnot(c2, t));
        emit_ry(out, t, q);
        out.push_back(Gate::cnot(c1, t));
        emit_ry(out, t, -q);
        out.push_back(Gate::cnot(c2, t));
        return;
    }
    throw ValidationError("cannot lower gate with " + std::to_string(nc) + " controls: " + circuit::describe(g));
}

}  // namespace

circuit::Circuit lower_for_evaluation(const circuit::Circuit& c) {
    std::vector<Gate> out;
    for (const auto& g : c.gates()) {
        lower_gate(out, g);
    }
    return Circuit(c.qubit_count(), std::move(out));
}

std::size_t gadget_count(const circuit::Circuit& lowered) {
    std::size_t m = 0;
    for (const auto& g : lowered.gates()) {
        if (is_gadget_gate(g)) {
            ++m;
        }
    }
    return m;
}

}  // namespace qhedr::qhe
