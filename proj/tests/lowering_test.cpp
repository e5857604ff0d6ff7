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

#include <numbers>

#include <gtest/gtest.h>

#include "qhedr/circuit/simulate.hpp"
#include "qhedr/core/linalg.hpp"
#include "qhedr/experiments/random_circuits.hpp"
#include "qhedr/qhe/key_tracker.hpp"
#include "qhedr/qhe/lowering.hpp"
#include "qhedr/qpce/extraction.hpp"

namespace {

using namespace qhedr;
using circuit::Circuit;
using circuit::Gate;
using std::numbers::pi;

void expect_lowered(const Circuit& c) {
    const Circuit low = qhe::lower_for_evaluation(c);
    for (const auto& g : low.gates()) {
        EXPECT_TRUE(qhe::is_clifford_gate(g) || qhe::is_gadget_gate(g)) << circuit::describe(g);
    }
    EXPECT_TRUE(core::equal_up_to_global_phase(circuit::circuit_unitary(low), circuit::circuit_unitary(c), 1e-10));
}

TEST(Lowering, SingleQubitGates) {
    Circuit c(1);
    c.add(Gate::u3(0, 0.3, 1.1, -0.4)).add(Gate::u1(0, pi / 4)).add(Gate::rx(0, pi / 2)).add(Gate::y(0));
    expect_lowered(c);
}

TEST(Lowering, ControlledGates) {
    Circuit c(3);
    c.add(Gate::u3(1, -pi / 2, -pi / 2, pi / 2).controlled_by({0}));
    c.add(Gate::ry(2, 2.094).controlled_by({0, 1}));
    c.add(Gate::u1(1, 3 * pi / 4).controlled_by({2}));
    c.add(Gate::h(0).controlled_by({2}));
    expect_lowered(c);
}

TEST(Lowering, CliffordAnglesCollapse) {
    Circuit c(1);
    c.add(Gate::rz(0, pi / 2)).add(Gate::u1(0, pi / 4)).add(Gate::ry(0, pi));
    const Circuit low = qhe::lower_for_evaluation(c);
    EXPECT_EQ(qhe::gadget_count(low), 1u);
    expect_lowered(c);
}

TEST(Lowering, ExtractionCircuitLowers) {
    const Circuit c = qpce::build_extraction_circuit();
    expect_lowered(c);
    EXPECT_GT(qhe::gadget_count(qhe::lower_for_evaluation(c)), 0u);
}

TEST(Lowering, RandomCircuitsPreserveUnitary) {
    for (int i = 0; i < 20; ++i) {
        Rng rng(i);
        expect_lowered(experiments::random_circuit({}, rng));
    }
}

}  // namespace
