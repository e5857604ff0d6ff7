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

#include "qhedr/circuit/simulate.hpp"
#include "qhedr/core/linalg.hpp"
#include "qhedr/experiments/random_circuits.hpp"
#include "qhedr/protocol/protocol.hpp"
#include "qhedr/qpce/extraction.hpp"
#include "qhedr/qpce/qpce.hpp"

namespace {

using namespace qhedr;
using circuit::Circuit;
using circuit::Gate;
using protocol::ProtocolConfig;
using protocol::ProtocolError;

Circuit htht() {
    Circuit c(1);
    c.add(Gate::t(0)).add(Gate::h(0)).add(Gate::t(0)).add(Gate::h(0));
    return c;
}

CMatrix plain_density(const Circuit& c, const core::StateVector& in) {
    const CVector v = circuit::simulate_statevector(c, in).amplitudes();
    return v * v.adjoint();
}

TEST(Protocol, HthtDecryptsForEverySeed) {
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        ProtocolConfig cfg;
        cfg.circuit = htht();
        cfg.input = core::StateVector::zero(1);
        cfg.seed = seed;
        const auto rep = protocol::run_protocol(cfg);
        EXPECT_LT(core::trace_distance(rep.decrypted, plain_density(htht(), core::StateVector::zero(1))), 1e-10);
        EXPECT_EQ(rep.outcomes.size(), 2u);
        EXPECT_TRUE(rep.interactivity.ok());
        EXPECT_EQ(rep.ownership_violations, 0u);
    }
}

TEST(Protocol, DeterministicUnderSeed) {
    ProtocolConfig cfg;
    cfg.circuit = htht();
    cfg.seed = 77;
    const auto r1 = protocol::run_protocol(cfg);
    const auto r2 = protocol::run_protocol(cfg);
    EXPECT_EQ(r1.initial_key.a, r2.initial_key.a);
    EXPECT_EQ(r1.final_key.a, r2.final_key.a);
    ASSERT_EQ(r1.outcomes.size(), r2.outcomes.size());
    for (std::size_t i = 0; i < r1.outcomes.size(); ++i) {
        EXPECT_EQ(r1.outcomes[i].r_a, r2.outcomes[i].r_a);
        EXPECT_EQ(r1.outcomes[i].r_b, r2.outcomes[i].r_b);
    }
}

TEST(Protocol, LazyAndEagerAgree) {
    Rng rng(5);
    const Circuit c = experiments::random_circuit({3, 3, 12, 4, true, false}, rng);
    const auto in = experiments::random_state(3, rng);
    ProtocolConfig cfg;
    cfg.circuit = c;
    cfg.input = in;
    cfg.seed = 12;
    const auto lazy = protocol::run_protocol(cfg);
    cfg.mode = circuit::DeferredSimulator::Mode::Eager;
    const auto eager = protocol::run_protocol(cfg);
    EXPECT_LT((lazy.decrypted - eager.decrypted).norm(), 1e-10);
    EXPECT_LE(lazy.peak_live_qubits, eager.peak_live_qubits);
}

TEST(Protocol, MixedInputThroughPurification) {
    Rng rng(6);
    const auto rho = experiments::random_density(2, rng);
    Circuit c(2);
    c.add(Gate::h(0)).add(Gate::t(0)).add(Gate::cnot(0, 1)).add(Gate::ry(1, 0.4));
    ProtocolConfig cfg;
    cfg.circuit = c;
    cfg.input = rho;
    cfg.seed = 1;
    const auto rep = protocol::run_protocol(cfg);
    EXPECT_LT(core::trace_distance(rep.decrypted, circuit::simulate_density(c, rho).matrix()), 1e-10);
}

TEST(Protocol, CiphertextLooksMixedBeforeDecryption) {
    // Averaged over keys, the returned ciphertext carries no information.
    Circuit c(1);
    c.add(Gate::h(0));
    CMatrix avg = CMatrix::Zero(2, 2);
    for (int k = 0; k < 4; ++k) {
        ProtocolConfig cfg;
        cfg.circuit = c;
        cfg.key = qhe::PauliKey::fixed({k & 1}, {k >> 1});
        avg += protocol::run_protocol(cfg).ciphertext / 4.0;
    }
    EXPECT_LT((avg - CMatrix::Identity(2, 2) / 2.0).norm(), 1e-10);
}

TEST(Protocol, KeyReuseRejected) {
    ProtocolConfig cfg;
    cfg.circuit = htht();
    cfg.key = qhe::PauliKey::fixed({1}, {0});
    EXPECT_NO_THROW(protocol::run_protocol(cfg));
    try {
        protocol::run_protocol(cfg);
        FAIL() << "reused pad accepted";
    } catch (const ProtocolError& e) {
        EXPECT_EQ(e.stage(), "encrypt");
    }
}

TEST(Protocol, TooFewBellPairsRejected) {
    auto client = protocol::client_prepare(core::StateVector::zero(1), 1, 3);
    const auto msg = protocol::client_encrypt(client, htht());
    try {
        protocol::server_evaluate(msg, *client.registry);
        FAIL();
    } catch (const ProtocolError& e) {
        EXPECT_EQ(e.stage(), "evaluate");
    }
}

TEST(Protocol, ServerCannotTouchClientQubits) {
    auto client = protocol::client_prepare(core::StateVector::zero(1), 0, 3);
    protocol::ActorBackend server(*client.registry, protocol::Actor::Server);
    EXPECT_THROW(server.apply(Gate::x(client.data[0])), ProtocolError);
    EXPECT_EQ(client.registry->violations(), 1u);
}

TEST(Protocol, UnsupportedGateReportsStage) {
    ProtocolConfig cfg;
    cfg.circuit = Circuit(3);
    cfg.circuit.add(Gate::unitary({0, 1}, CMatrix::Identity(4, 4)));
    cfg.input = core::StateVector::zero(3);
    try {
        protocol::run_protocol(cfg);
        FAIL();
    } catch (const ProtocolError& e) {
        EXPECT_EQ(e.stage(), "prepare");
    }
}

TEST(Protocol, ForcedOutcomesGiveBranchWeight) {
    ProtocolConfig cfg;
    cfg.circuit = htht();
    cfg.forced_outcomes = std::vector<qhe::BellOutcome>{{0, 1, 1}, {1, 0, 2}};
    const auto rep = protocol::run_protocol(cfg);
    EXPECT_NEAR(rep.branch_probability, 1.0 / 16.0, 1e-12);
    EXPECT_EQ(rep.outcomes[0].r_b, 1);
    EXPECT_EQ(rep.outcomes[1].r_a, 1);
}

TEST(Protocol, LogHasTwoQuantumMessagesAndNoKeys) {
    ProtocolConfig cfg;
    cfg.circuit = htht();
    cfg.seed = 4;
    const auto rep = protocol::run_protocol(cfg);
    ASSERT_EQ(rep.log.size(), 2u);
    EXPECT_EQ(rep.log[0].from, protocol::Actor::Client);
    EXPECT_EQ(rep.log[1].from, protocol::Actor::Server);
    EXPECT_EQ(rep.log[0].payload.dump().find("\"key\""), std::string::npos);
}

TEST(Protocol, ScanLogFlagsExtraRound) {
    ProtocolConfig cfg;
    cfg.circuit = htht();
    auto log = protocol::run_protocol(cfg).log;
    log.push_back({2, protocol::Actor::Client, protocol::Actor::Server, "followup", {}, {{"a0[0]", 1}}});
    const auto r = protocol::scan_log(log);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(r.key_symbols_to_server);
}

TEST(Protocol, DatasetInput) {
    qpce::Dataset d{{{1, 0}, {0, 1}, {1, 1}}};
    Circuit c(2);
    c.add(Gate::h(0)).add(Gate::t(1));
    ProtocolConfig cfg;
    cfg.circuit = c;
    cfg.input = d;
    const auto rep = protocol::run_protocol(cfg);
    const auto enc = qpce::encode_operator(qpce::covariance_density(qpce::standardize(d)).matrix());
    EXPECT_LT(core::trace_distance(rep.decrypted, plain_density(c, enc)), 1e-10);
}

TEST(Protocol, ExtractionCircuitUnderEncryption) {
    const Circuit c = qpce::build_extraction_circuit();
    ProtocolConfig cfg;
    cfg.circuit = c;
    cfg.input = core::StateVector::zero(c.qubit_count());
    cfg.seed = 8;
    const auto rep = protocol::run_protocol(cfg);
    EXPECT_LT(core::trace_distance(rep.decrypted, plain_density(c, core::StateVector::zero(c.qubit_count()))),
              1e-8);
    EXPECT_LE(rep.peak_live_qubits, 20);
}

}  // namespace
