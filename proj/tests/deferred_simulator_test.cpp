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

#include <gtest/gtest.h>

#include "qhedr/circuit/deferred_simulator.hpp"
#include "qhedr/core/linalg.hpp"
#include "qhedr/experiments/random_circuits.hpp"

namespace {

using namespace qhedr;
using circuit::DeferredSimulator;
using circuit::Gate;

TEST(DeferredSimulator, LazyMatchesEagerOnRandomCircuits) {
    for (int trial = 0; trial < 25; ++trial) {
        Rng gen(trial);
        const auto c = experiments::random_circuit({2, 3, 12, 4, true, false}, gen);
        const auto in = experiments::random_state(c.qubit_count(), gen);
        // Sparse ids to exercise the remapping.
        std::vector<int> ids;
        for (int q = 0; q < c.qubit_count(); ++q) {
            ids.push_back(10 + 7 * q);
        }
        DeferredSimulator lazy(DeferredSimulator::Mode::Lazy);
        DeferredSimulator eager(DeferredSimulator::Mode::Eager);
        lazy.prepare(ids, in);
        eager.prepare(ids, in);
        const auto mapped = c.remapped(ids, 100);
        for (const auto& g : mapped.gates()) {
            lazy.apply(g);
            eager.apply(g);
        }
        Rng r1(trial + 1000);
        Rng r2(trial + 1000);
        const int first[] = {ids[0]};
        EXPECT_EQ(lazy.measure(first, r1), eager.measure(first, r2));
        std::vector<int> rest(ids.begin() + 1, ids.end());
        EXPECT_LT((lazy.reduced_density(rest) - eager.reduced_density(rest)).norm(), 1e-10);
    }
}

TEST(DeferredSimulator, UntouchedQubitsNeverMaterialize) {
    DeferredSimulator sim;
    for (int k = 0; k < 30; ++k) {
        sim.apply(Gate::h(k));
    }
    const int q[] = {3};
    Rng rng(1);
    sim.measure(q, rng);
    EXPECT_EQ(sim.peak_live_qubits(), 1);
    EXPECT_EQ(sim.pending_gates(), 29u);
}

TEST(DeferredSimulator, MeasuredQubitsAreRemovedAndLocked) {
    DeferredSimulator sim;
    sim.apply(Gate::h(0));
    sim.apply(Gate::cnot(0, 1));
    const int q[] = {0};
    const int one[] = {1};
    EXPECT_NEAR(sim.force(q, one), 0.5, 1e-12);
    EXPECT_TRUE(sim.is_measured(0));
    EXPECT_THROW(sim.apply(Gate::x(0)), ValidationError);
    const int other[] = {1};
    EXPECT_NEAR(sim.reduced_density(other)(1, 1).real(), 1.0, 1e-12);
    EXPECT_EQ(sim.live_qubits(), std::vector<int>{1});
}

TEST(DeferredSimulator, ForcingImpossibleBranchThrows) {
    DeferredSimulator sim;
    sim.apply(Gate::x(0));
    const int q[] = {0};
    const int zero[] = {0};
    EXPECT_THROW(sim.force(q, zero), ValidationError);
}

TEST(DeferredSimulator, LiveQubitCapEnforced) {
    DeferredSimulator sim(DeferredSimulator::Mode::Eager, 3);
    sim.apply(Gate::h(0));
    sim.apply(Gate::h(1));
    sim.apply(Gate::h(2));
    EXPECT_THROW(sim.apply(Gate::h(3)), std::runtime_error);
}

TEST(DeferredSimulator, PrepareRejectsUsedQubits) {
    DeferredSimulator sim;
    sim.apply(Gate::h(0));
    const int q[] = {0};
    EXPECT_THROW(sim.prepare(q, core::StateVector::zero(1)), ValidationError);
}

TEST(DeferredSimulator, StatevectorOrdersByRequest) {
    DeferredSimulator sim;
    sim.apply(Gate::x(5));
    sim.apply(Gate::h(2));
    const int order[] = {5, 2};
    const auto s = sim.statevector(order);
    EXPECT_NEAR(std::abs(s[1]), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(std::abs(s[3]), std::sqrt(0.5), 1e-12);
    const int partial[] = {5};
    EXPECT_THROW(sim.statevector(partial), ValidationError);
}

}  // namespace
