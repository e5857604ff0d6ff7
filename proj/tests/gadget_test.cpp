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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qhedr/circuit/deferred_simulator.hpp"
#include "qhedr/core/linalg.hpp"
#include "qhedr/experiments/random_circuits.hpp"
#include "qhedr/qhe/gadget.hpp"
#include "qhedr/qhe/key_tracker.hpp"
#include "qhedr/qhe/pauli_key.hpp"

namespace {

using namespace qhedr;
using circuit::DeferredSimulator;
using circuit::Gate;

// One gadget on a single encrypted qubit: after the client's correction
// and the updated key, decryption must give g|psi>.
void check_gadget(const Gate& g) {
    Rng rng(17);
    const auto psi = experiments::random_state(1, rng);
    CMatrix gm = circuit::gate_matrix(g);
    const CVector want = gm * psi.amplitudes();
    for (int key = 0; key < 4; ++key) {
        for (int out = 0; out < 4; ++out) {
            const int a = key & 1;
            const int b = key >> 1;
            const int ra = out & 1;
            const int rb = out >> 1;
            DeferredSimulator sim;
            const int data[] = {0};
            sim.prepare(data, psi);
            for (const auto& p : qhe::pauli_gates(std::vector<int>{a}, std::vector<int>{b}, data)) {
                sim.apply(p);
            }
            qhe::KeyTracker tracker(1);
            const qhe::GadgetSpec spec = tracker.apply_gadget(g);
            qhe::GadgetRecord rec{1, 0, 1, 2, false, false};
            qhe::prepare_bell_pair(sim, rec);
            qhe::server_gadget_step(sim, g, rec);
            auto bind = qhe::key_bindings({a}, {b});
            const int h = spec.h.evaluate(bind);
            double p = 0;
            qhe::rotated_bell_measurement_forced(sim, rec, spec.basis(rec.server_half), h, ra, rb, &p);
            EXPECT_NEAR(p, 0.25, 1e-12);
            bind[qhe::Symbol::ra(1)] = ra;
            bind[qhe::Symbol::rb(1)] = rb;
            const std::vector<int> fa{tracker.a(0).evaluate(bind)};
            const std::vector<int> fb{tracker.b(0).evaluate(bind)};
            for (const auto& d : qhe::pauli_gates(fa, fb, data)) {
                sim.apply(d);
            }
            const CMatrix rho = sim.reduced_density(data);
            EXPECT_NEAR((want.adjoint() * rho * want)(0, 0).real(), 1.0, 1e-10)
                << circuit::describe(g) << " key " << key << " outcome " << out;
        }
    }
}

TEST(Gadget, T) { check_gadget(Gate::t(0)); }
TEST(Gadget, Tdg) { check_gadget(Gate::tdg(0)); }
TEST(Gadget, Rz) { check_gadget(Gate::rz(0, 0.37)); }
TEST(Gadget, U1) { check_gadget(Gate::u1(0, -1.2)); }
TEST(Gadget, Rx) { check_gadget(Gate::rx(0, 2.1)); }
TEST(Gadget, Ry) { check_gadget(Gate::ry(0, 0.9)); }

TEST(Gadget, ServerStepIsSingleUse) {
    DeferredSimulator sim;
    qhe::GadgetRecord rec{1, 0, 1, 2, false, false};
    qhe::prepare_bell_pair(sim, rec);
    qhe::server_gadget_step(sim, Gate::t(0), rec);
    EXPECT_TRUE(rec.consumed);
    EXPECT_THROW(qhe::server_gadget_step(sim, Gate::t(0), rec), ValidationError);
}

TEST(Gadget, RecordValidation) {
    qhe::GadgetRecord rec{1, 0, 0, 2, false, false};
    EXPECT_THROW(rec.validate(), ValidationError);
}

TEST(Gadget, BellPairIsMaximallyEntangled) {
    DeferredSimulator sim;
    qhe::GadgetRecord rec{1, 0, 1, 2, false, false};
    qhe::prepare_bell_pair(sim, rec);
    const int half[] = {2};
    EXPECT_LT((sim.reduced_density(half) - CMatrix::Identity(2, 2) / 2.0).norm(), 1e-12);
}

TEST(Gadget, GadgetTypeNames) {
    for (auto t : {qhe::GadgetType::T, qhe::GadgetType::Tdg, qhe::GadgetType::Rz, qhe::GadgetType::Rx,
                   qhe::GadgetType::Ry}) {
        EXPECT_EQ(qhe::parse_gadget_type(qhe::gadget_type_name(t)), t);
    }
}

}  // namespace
