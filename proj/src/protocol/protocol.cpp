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

#include "qhedr/protocol/protocol.hpp"

#include <cmath>
#include <mutex>
#include <set>

#include "qhedr/core/linalg.hpp"
#include "qhedr/qhe/lowering.hpp"
#include "qhedr/qpce/qpce.hpp"

namespace qhedr::protocol {

using circuit::Gate;

namespace {

/// Pads already spent in this process.
class UsedKeys {
  public:
    bool claim(std::uint64_t id) {
        std::lock_guard<std::mutex> lock(mu_);
        return used_.insert(id).second;
    }

  private:
    std::mutex mu_;
    std::set<std::uint64_t> used_;
};

UsedKeys& used_keys() {
    static UsedKeys k;
    return k;
}

/// Pure state on data + reference qubits whose data marginal is the input.
core::StateVector purify(const ProtocolInput& input, int& data_qubits, int& ref_qubits) {
    if (const auto* s = std::get_if<core::StateVector>(&input)) {
        data_qubits = s->qubit_count();
        ref_qubits = 0;
        return *s;
    }
    CMatrix rho;
    if (const auto* d = std::get_if<core::DensityMatrix>(&input)) {
        rho = d->matrix();
    } else {
        const auto& ds = std::get<qpce::Dataset>(input);
        const auto cov = qpce::covariance_density(qpce::standardize(ds));
        const auto enc = qpce::encode_operator(cov.matrix());
        data_qubits = enc.qubit_count();
        ref_qubits = 0;
        return enc;
    }
    const auto dec = core::eigendecompose(rho);
    const auto dim = static_cast<Eigen::Index>(rho.rows());
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < dec.eigenvalues.size(); ++k) {
        if (dec.eigenvalues[k] > 1e-14) {
            kept.push_back(k);
        }
    }
    data_qubits = core::qubits_for_dimension(static_cast<std::size_t>(dim));
    ref_qubits = 0;
    while ((std::size_t{1} << ref_qubits) < kept.size()) {
        ++ref_qubits;
    }
    CVector amps = CVector::Zero(dim << ref_qubits);
    for (std::size_t j = 0; j < kept.size(); ++j) {
        const std::size_t k = kept[j];
        amps.segment(static_cast<Eigen::Index>(j) * dim, dim) = std::sqrt(dec.eigenvalues[k]) * dec.eigenvectors[k];
    }
    amps /= amps.norm();
    return core::StateVector(std::move(amps));
}

template <typename F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ProtocolError&) {
        throw;
    } catch (const std::exception& e) {
        throw ProtocolError(stage, e.what());
    }
}

}  // namespace

int input_qubits(const ProtocolInput& input) {
    int d = 0;
    int r = 0;
    purify(input, d, r);
    return d;
}

ClientState client_prepare(const ProtocolInput& input, std::size_t m_required, std::uint64_t seed,
                           std::optional<qhe::PauliKey> key, circuit::DeferredSimulator::Mode mode) {
    return staged("prepare", [&] {
        ClientState c;
        c.registry = std::make_unique<QubitRegistry>(mode);
        int n = 0;
        int refs = 0;
        const core::StateVector joint = purify(input, n, refs);
        std::vector<int> all;
        for (int q = 0; q < n; ++q) {
            c.data.push_back(c.registry->add(Actor::Client, QubitRole::Data));
        }
        for (int q = 0; q < refs; ++q) {
            c.reference.push_back(c.registry->add(Actor::Client, QubitRole::Reference));
        }
        all = c.data;
        all.insert(all.end(), c.reference.begin(), c.reference.end());
        c.registry->state().prepare(all, joint);

        ActorBackend client(*c.registry, Actor::Client);
        for (std::size_t i = 0; i < m_required; ++i) {
            qhe::GadgetRecord rec;
            rec.index = static_cast<int>(i) + 1;
            rec.client_half = c.registry->add(Actor::Client, QubitRole::BellClientHalf);
            rec.server_half = c.registry->add(Actor::Client, QubitRole::BellServerHalf);
            rec.data_qubit = -1;
            qhe::prepare_bell_pair(client, rec);
            c.client_halves.push_back(rec.client_half);
            c.server_halves.push_back(rec.server_half);
        }
        if (key) {
            if (key->qubit_count() != n) {
                throw ValidationError("supplied key covers " + std::to_string(key->qubit_count()) +
                                      " qubits, input has " + std::to_string(n));
            }
            c.key = *key;
        } else {
            c.key = qhe::keygen(n, seed);
        }
        return c;
    });
}

CipherMessage client_encrypt(ClientState& client, const circuit::Circuit& circuit) {
    return staged("encrypt", [&] {
        if (client.encrypted) {
            throw ProtocolError("encrypt", "this session is already encrypted");
        }
        if (client.key.qubit_count() != static_cast<int>(client.data.size())) {
            throw ValidationError("key length does not match the data register");
        }
        if (!used_keys().claim(client.key.id)) {
            throw ProtocolError("encrypt", "key instance " + std::to_string(client.key.id) +
                                               " was already used; a one-time pad is never reused");
        }
        ActorBackend backend(*client.registry, Actor::Client);
        for (const auto& g : qhe::pauli_gates(client.key.a, client.key.b, client.data)) {
            backend.apply(g);
        }
        client.encrypted = true;
        CipherMessage m;
        m.qubits = client.data;
        m.bell_halves = client.server_halves;
        m.circuit = circuit;
        return m;
    });
}

EvalTranscript server_evaluate(const CipherMessage& msg, QubitRegistry& registry) {
    return staged("evaluate", [&] {
        const int n = static_cast<int>(msg.qubits.size());
        if (msg.circuit.qubit_count() > n) {
            throw ValidationError("circuit needs " + std::to_string(msg.circuit.qubit_count()) + " qubits, " +
                                  std::to_string(n) + " were sent");
        }
        const circuit::Circuit lowered = qhe::lower_for_evaluation(msg.circuit);
        EvalTranscript t;
        t.program = qhe::build_key_update_program(lowered, n);
        const std::size_t m = t.program.measurement_count();
        if (m > msg.bell_halves.size()) {
            throw ProtocolError("evaluate", "circuit needs " + std::to_string(m) + " gadgets but only " +
                                                std::to_string(msg.bell_halves.size()) + " Bell pairs were sent");
        }
        ActorBackend backend(registry, Actor::Server);
        std::size_t next = 0;
        for (const auto& g : lowered.gates()) {
            Gate mapped = g;
            for (int& q : mapped.targets) {
                q = msg.qubits[static_cast<std::size_t>(q)];
            }
            for (int& q : mapped.controls) {
                q = msg.qubits[static_cast<std::size_t>(q)];
            }
            if (qhe::is_gadget_gate(g)) {
                qhe::GadgetRecord rec;
                rec.index = static_cast<int>(next) + 1;
                rec.data_qubit = mapped.targets[0];
                rec.client_half = -1;  // not visible to the server
                rec.server_half = msg.bell_halves[next];
                qhe::server_gadget_step(backend, mapped, rec);
                ++next;
            } else {
                backend.apply(mapped);
            }
        }
        t.result_qubits = msg.qubits;
        t.bell_halves = msg.bell_halves;
        return t;
    });
}

ProtocolReport client_measure_and_decrypt(const EvalTranscript& transcript, ClientState& client, Rng& rng,
                                          const std::vector<qhe::BellOutcome>* forced) {
    ProtocolReport r;
    r.program = transcript.program;
    r.initial_key = client.key;
    staged("measure", [&] {
        transcript.program.check_causality();
        if (transcript.result_qubits != client.data) {
            throw ValidationError("transcript result qubits differ from the data register");
        }
        const std::size_t m = transcript.program.measurement_count();
        if (forced && forced->size() < m) {
            throw ValidationError("forced outcome list is shorter than the gadget count");
        }
        ActorBackend backend(*client.registry, Actor::Client);
        qhe::Bindings bindings = qhe::key_bindings(client.key.a, client.key.b);
        for (std::size_t i = 0; i < m; ++i) {
            const auto& spec = transcript.program.gadgets[i];
            qhe::GadgetRecord rec;
            rec.index = spec.index;
            rec.data_qubit = client.data[static_cast<std::size_t>(spec.data_qubit)];
            rec.client_half = client.client_halves[i];
            rec.server_half = transcript.bell_halves[i];
            rec.consumed = true;
            const int h = spec.h.evaluate(bindings);
            const Gate basis = spec.basis(rec.server_half);
            qhe::BellOutcome o;
            if (forced) {
                double p = 0.0;
                o = qhe::rotated_bell_measurement_forced(backend, rec, basis, h, (*forced)[i].r_a, (*forced)[i].r_b,
                                                         &p);
                r.branch_probability *= p;
            } else {
                o = qhe::rotated_bell_measurement(backend, rec, basis, h, rng);
            }
            bindings[qhe::Symbol::ra(spec.index)] = o.r_a;
            bindings[qhe::Symbol::rb(spec.index)] = o.r_b;
            r.outcomes.push_back(o);
        }
        r.final_key = qhe::evaluate_final_key(transcript.program, bindings);
        return 0;
    });
    staged("decrypt", [&] {
        auto& sim = client.registry->state();
        r.ciphertext = sim.reduced_density(client.data);
        ActorBackend backend(*client.registry, Actor::Client);
        for (const auto& g : qhe::pauli_gates(r.final_key.a, r.final_key.b, client.data)) {
            backend.apply(g);
        }
        r.decrypted = sim.reduced_density(client.data);
        r.peak_live_qubits = sim.peak_live_qubits();
        return 0;
    });
    r.metrics = qhe::quasi_compactness_metrics(r.program);
    r.ownership_violations = client.registry->violations();
    return r;
}

ProtocolReport run_protocol(const ProtocolConfig& config) {
    const std::size_t m_required = staged("prepare", [&] {
        return qhe::gadget_count(qhe::lower_for_evaluation(config.circuit));
    });
    // Key and measurement randomness come from one stream seeded once.
    Rng rng(config.seed);
    const std::uint64_t key_seed = rng();
    ClientState client = client_prepare(config.input, m_required, key_seed, config.key, config.mode);
    InProcessChannel channel(*client.registry);

    const CipherMessage cipher = client_encrypt(client, config.circuit);
    std::vector<int> shipped = cipher.qubits;
    shipped.insert(shipped.end(), cipher.bell_halves.begin(), cipher.bell_halves.end());
    channel.send({0, Actor::Client, Actor::Server, "cipher", shipped, cipher.to_json()});

    auto at_server = channel.receive(Actor::Server);
    if (!at_server) {
        throw ProtocolError("transport", "cipher message was not delivered");
    }
    const EvalTranscript transcript =
        server_evaluate(staged("transport", [&] { return CipherMessage::from_json(at_server->payload); }),
                        *client.registry);
    std::vector<int> returned = transcript.result_qubits;
    returned.insert(returned.end(), transcript.bell_halves.begin(), transcript.bell_halves.end());
    channel.send({0, Actor::Server, Actor::Client, "transcript", returned, transcript.to_json()});

    auto at_client = channel.receive(Actor::Client);
    if (!at_client) {
        throw ProtocolError("transport", "transcript was not delivered");
    }
    const EvalTranscript received =
        staged("transport", [&] { return EvalTranscript::from_json(at_client->payload); });
    const auto* forced = config.forced_outcomes ? &*config.forced_outcomes : nullptr;
    ProtocolReport report = client_measure_and_decrypt(received, client, rng, forced);
    report.log = channel.log();
    report.interactivity = scan_log(report.log);
    if (!report.interactivity.ok()) {
        throw ProtocolError("transport", "non-interactivity check failed: " + report.interactivity.issues.front());
    }
    return report;
}

namespace {

nlohmann::json matrix_json(const CMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

nlohmann::json ProtocolReport::to_json() const {
    nlohmann::json outs = nlohmann::json::array();
    for (const auto& o : outcomes) {
        outs.push_back({{"gadget", o.gadget_index}, {"ra", o.r_a}, {"rb", o.r_b}});
    }
    return {{"decrypted", matrix_json(decrypted)},
            {"ciphertext", matrix_json(ciphertext)},
            {"outcomes", outs},
            {"initial_key", {{"a", initial_key.a}, {"b", initial_key.b}}},
            {"final_key", {{"a", final_key.a}, {"b", final_key.b}}},
            {"program", program.to_json()},
            {"metrics", metrics.to_json()},
            {"interactivity", interactivity.to_json()},
            {"branch_probability", branch_probability},
            {"peak_live_qubits", peak_live_qubits},
            {"ownership_violations", ownership_violations},
            {"trace", trace_to_json(log)}};
}

}  // namespace qhedr::protocol
