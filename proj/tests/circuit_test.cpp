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

#include "qhedr/circuit/circuit_json.hpp"
#include "qhedr/circuit/simulate.hpp"
#include "qhedr/core/linalg.hpp"
#include "qhedr/experiments/random_circuits.hpp"

namespace {

using namespace qhedr;
using circuit::Circuit;
using circuit::Gate;
using core::DensityMatrix;
using core::StateVector;
using std::numbers::pi;

CMatrix dense(const Gate& g, int n) {
    // Embeds gate_matrix into n qubits by brute force over basis states.
    const auto qs = g.qubits();
    const CMatrix local = circuit::gate_matrix(g);
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix u = CMatrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        std::size_t lc = 0;
        for (std::size_t k = 0; k < qs.size(); ++k) {
            lc |= ((static_cast<std::size_t>(col) >> qs[k]) & 1U) << k;
        }
        for (Eigen::Index lr = 0; lr < local.rows(); ++lr) {
            std::size_t row = static_cast<std::size_t>(col);
            for (std::size_t k = 0; k < qs.size(); ++k) {
                row &= ~(std::size_t{1} << qs[k]);
                row |= ((static_cast<std::size_t>(lr) >> k) & 1U) << qs[k];
            }
            u(static_cast<Eigen::Index>(row), col) += local(lr, static_cast<Eigen::Index>(lc));
        }
    }
    return u;
}

TEST(Gate, TMatrix) {
    const CMatrix t = circuit::gate_matrix(Gate::t(0));
    EXPECT_NEAR(std::abs(t(1, 1) - std::polar(1.0, pi / 4)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t(0, 0) - 1.0), 0.0, 1e-15);
}

TEST(Gate, RxMatchesU3) {
    const CMatrix rx = circuit::gate_matrix(Gate::rx(0, -pi / 2));
    CMatrix expect(2, 2);
    expect << 1, Complex(0, 1), Complex(0, 1), 1;
    expect *= std::sqrt(0.5);
    EXPECT_LT((rx - expect).norm(), 1e-12);
    const CMatrix u3 = circuit::gate_matrix(Gate::u3(0, -pi / 2, -pi / 2, pi / 2));
    EXPECT_TRUE(core::equal_up_to_global_phase(rx, u3, 1e-12));
}

TEST(Gate, RyZeroIsIdentity) {
    EXPECT_LT((circuit::gate_matrix(Gate::ry(0, 0.0)) - CMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(Gate, ValidationRejectsMalformed) {
    Gate g = Gate::rx(0, 0.1);
    g.params.clear();
    EXPECT_THROW(circuit::validate(g), ValidationError);
    EXPECT_THROW(circuit::validate(Gate::cnot(1, 1)), ValidationError);
    EXPECT_THROW(circuit::validate(Gate::unitary({0}, CMatrix::Ones(2, 2))), ValidationError);
}

TEST(Gate, AdjointInverts) {
    for (const Gate& g : {Gate::t(0), Gate::s(0), Gate::u3(0, 0.3, 0.2, 0.9), Gate::rz(0, 1.1),
                          Gate::ry(0, 0.4).controlled_by({1})}) {
        const CMatrix u = dense(g, 2);
        EXPECT_LT((dense(g.adjoint(), 2) * u - CMatrix::Identity(4, 4)).norm(), 1e-12) << circuit::describe(g);
    }
}

TEST(Circuit, RejectsOutOfRange) {
    Circuit c(2);
    EXPECT_THROW(c.add(Gate::x(2)), ValidationError);
    EXPECT_THROW(Circuit(-1), ValidationError);
}

TEST(Circuit, TPositionsEnumerateTGates) {
    Circuit c(2);
    c.add(Gate::h(0)).add(Gate::t(1)).add(Gate::cnot(0, 1)).add(Gate::tdg(0));
    const auto pos = c.t_positions();
    ASSERT_EQ(pos.size(), 2u);
    EXPECT_EQ(pos[0].gate_index, 1u);
    EXPECT_EQ(pos[0].qubit, 1);
    EXPECT_EQ(pos[1].gate_index, 3u);
    EXPECT_EQ(pos[1].qubit, 0);
}

TEST(Simulate, BellState) {
    Circuit c(2);
    c.add(Gate::h(0)).add(Gate::cnot(0, 1));
    const auto out = circuit::simulate_statevector(c, StateVector::zero(2));
    EXPECT_NEAR(out[0].real(), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(out[3].real(), std::sqrt(0.5), 1e-12);
}

TEST(Simulate, EmptyCircuitIsIdentity) {
    Rng rng(2);
    const auto s = experiments::random_state(2, rng);
    const auto out = circuit::simulate_statevector(Circuit(2), s);
    EXPECT_LT((out.amplitudes() - s.amplitudes()).norm(), 1e-15);
}

TEST(Simulate, DimensionMismatchThrows) {
    EXPECT_THROW(circuit::simulate_statevector(Circuit(2), StateVector::zero(3)), ValidationError);
}

TEST(Simulate, MatchesMatrixProductOnRandomCircuits) {
    for (int trial = 0; trial < 30; ++trial) {
        Rng rng(100 + trial);
        experiments::RandomCircuitSpec spec;
        spec.min_qubits = 3;
        const Circuit c = experiments::random_circuit(spec, rng);
        CMatrix u = CMatrix::Identity(8, 8);
        for (const auto& g : c.gates()) {
            u = dense(g, 3) * u;
        }
        const auto in = experiments::random_state(3, rng);
        const auto out = circuit::simulate_statevector(c, in);
        EXPECT_LT((out.amplitudes() - u * in.amplitudes()).norm(), 1e-10);
        EXPECT_LT((circuit::circuit_unitary(c) - u).norm(), 1e-10);
    }
}

TEST(SimulateDensity, BitFlipAndMixedFixedPoint) {
    Circuit x(1);
    x.add(Gate::x(0));
    const auto out = circuit::simulate_density(x, DensityMatrix::from_pure(StateVector::zero(1)));
    EXPECT_NEAR(out(1, 1).real(), 1.0, 1e-12);

    Rng rng(4);
    const Circuit c = experiments::random_circuit({3, 3, 12, 4, true, false}, rng);
    const auto mixed = circuit::simulate_density(c, DensityMatrix::maximally_mixed(3));
    EXPECT_LT((mixed.matrix() - CMatrix::Identity(8, 8) / 8.0).norm(), 1e-12);
}

TEST(SimulateDensity, AgreesWithStatevectorPath) {
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(200 + trial);
        const Circuit c = experiments::random_circuit({}, rng);
        const auto in = experiments::random_state(c.qubit_count(), rng);
        const CVector psi = circuit::simulate_statevector(c, in).amplitudes();
        const auto rho = circuit::simulate_density(c, DensityMatrix::from_pure(in));
        EXPECT_LT((rho.matrix() - psi * psi.adjoint()).norm(), 1e-10);
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-9);
    }
}

TEST(Measure, BasisStateIsCertain) {
    const int q[] = {0};
    const auto r = circuit::measure_qubits(StateVector::basis(1, 1), q, 7);
    EXPECT_EQ(r.bits[0], 1);
    EXPECT_NEAR(r.probability, 1.0, 1e-12);
}

TEST(Measure, BellOutcomesAgree) {
    Circuit c(2);
    c.add(Gate::h(0)).add(Gate::cnot(0, 1));
    const auto bell = circuit::simulate_statevector(c, StateVector::zero(2));
    const int qs[] = {0, 1};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = circuit::measure_qubits(bell, qs, seed);
        EXPECT_EQ(r.bits[0], r.bits[1]);
        EXPECT_NEAR(r.probability, 0.5, 1e-12);
    }
}

TEST(Postselect, ImpossibleBranchThrows) {
    try {
        circuit::postselect(StateVector::zero(1), 0, 1);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("post-selection impossible"), std::string::npos);
    }
}

TEST(Postselect, PlusState) {
    CVector plus(2);
    plus << std::sqrt(0.5), std::sqrt(0.5);
    const auto r = circuit::postselect(StateVector(plus), 0, 1);
    EXPECT_NEAR(r.probability, 0.5, 1e-12);
    EXPECT_NEAR(std::abs(r.state[1]), 1.0, 1e-12);
}

TEST(DropQubits, RemovesFixedQubit) {
    const CVector in = core::tensor_product(StateVector::basis(1, 1).amplitudes(), CVector::Ones(2) / std::sqrt(2.0));
    const int q[] = {1};
    const int v[] = {1};
    const auto out = circuit::drop_qubits(StateVector(in), q, v);
    EXPECT_EQ(out.qubit_count(), 1);
    const int wrong[] = {0};
    EXPECT_THROW(circuit::drop_qubits(StateVector(in), q, wrong), ValidationError);
}

TEST(CircuitJson, RoundTrip) {
    Circuit c(3);
    c.add(Gate::h(0)).add(Gate::u3(1, 0.1, 0.2, 0.3)).add(Gate::ry(2, 0.5).controlled_by({0, 1}));
    CMatrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    c.add(Gate::unitary({2}, m, {0}));
    const Circuit back = circuit::circuit_from_json(circuit::circuit_to_json(c));
    EXPECT_LT((circuit::circuit_unitary(back) - circuit::circuit_unitary(c)).norm(), 1e-14);
    EXPECT_EQ(circuit::circuit_to_json(back), circuit::circuit_to_json(c));
}

TEST(CircuitJson, MalformedDocumentsRejected) {
    EXPECT_THROW(circuit::circuit_from_json(nlohmann::json::parse(R"({"qubits": 1})")), ValidationError);
    EXPECT_THROW(circuit::circuit_from_json(nlohmann::json::parse(
                     R"({"qubits": 1, "gates": [{"kind": "Q", "targets": [0]}]})")),
                 ValidationError);
    EXPECT_THROW(circuit::circuit_from_json(nlohmann::json::parse(
                     R"({"qubits": 1, "gates": [{"kind": "X", "targets": [3]}]})")),
                 ValidationError);
}

}  // namespace
