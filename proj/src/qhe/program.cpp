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

#include "qhedr/qhe/program.hpp"

#include <cmath>
#include <string>

#include "qhedr/circuit/circuit_json.hpp"

namespace qhedr::qhe {

std::vector<KeyPolynomial> KeyUpdateProgram::h_list() const {
    std::vector<KeyPolynomial> out;
    for (const auto& g : gadgets) {
        out.push_back(g.h);
    }
    return out;
}

void KeyUpdateProgram::check_causality() const {
    for (std::size_t i = 0; i < gadgets.size(); ++i) {
        const auto& g = gadgets[i];
        if (g.index != static_cast<int>(i) + 1) {
            throw ValidationError("gadget indices must run 1..M in order");
        }
        if (g.h.max_outcome_index() >= g.index) {
            throw ValidationError("h_" + std::to_string(g.index) + " = " + g.h.to_string() +
                                  " depends on an outcome that is not yet measured");
        }
        for (const auto& s : g.h.terms()) {
            if (!s.is_outcome() && (s.index < 0 || s.index >= n)) {
                throw ValidationError("h_" + std::to_string(g.index) + " names key bit " + s.name() +
                                      " outside the data register");
            }
        }
    }
}

bool KeyUpdateProgram::is_causal() const {
    try {
        check_causality();
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

nlohmann::json KeyUpdateProgram::to_json() const {
    nlohmann::json gs = nlohmann::json::array();
    for (const auto& g : gadgets) {
        gs.push_back({{"index", g.index},
                      {"data_qubit", g.data_qubit},
                      {"type", gadget_type_name(g.type)},
                      {"angle", g.angle},
                      {"gate", circuit::gate_to_json(g.gate)}});
    }
    nlohmann::json h = nlohmann::json::array();
    for (const auto& g : gadgets) {
        h.push_back(g.h.to_json());
    }
    nlohmann::json fa = nlohmann::json::array();
    nlohmann::json fb = nlohmann::json::array();
    for (const auto& p : final_a) {
        fa.push_back(p.to_json());
    }
    for (const auto& p : final_b) {
        fb.push_back(p.to_json());
    }
    return {{"n", n}, {"gadgets", gs}, {"h", h}, {"final_a", fa}, {"final_b", fb}};
}

KeyUpdateProgram KeyUpdateProgram::from_json(const nlohmann::json& j) {
    try {
        KeyUpdateProgram p;
        p.n = j.at("n").get<int>();
        const auto& gs = j.at("gadgets");
        const auto& h = j.at("h");
        if (gs.size() != h.size()) {
            throw ValidationError("program lists " + std::to_string(gs.size()) + " gadgets but " +
                                  std::to_string(h.size()) + " selectors");
        }
        for (std::size_t i = 0; i < gs.size(); ++i) {
            GadgetSpec g;
            g.index = gs[i].at("index").get<int>();
            g.data_qubit = gs[i].at("data_qubit").get<int>();
            g.type = parse_gadget_type(gs[i].at("type").get<std::string>());
            g.angle = gs[i].at("angle").get<double>();
            g.gate = circuit::gate_from_json(gs[i].at("gate"));
            g.h = KeyPolynomial::from_json(h[i]);
            p.gadgets.push_back(std::move(g));
        }
        for (const auto& x : j.at("final_a")) {
            p.final_a.push_back(KeyPolynomial::from_json(x));
        }
        for (const auto& x : j.at("final_b")) {
            p.final_b.push_back(KeyPolynomial::from_json(x));
        }
        if (static_cast<int>(p.final_a.size()) != p.n || static_cast<int>(p.final_b.size()) != p.n) {
            throw ValidationError("final key length differs from n");
        }
        p.check_causality();
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed key-update program: ") + e.what());
    }
}

KeyUpdateProgram build_key_update_program(const circuit::Circuit& c, int n) {
    if (c.qubit_count() > n) {
        throw ValidationError("circuit uses " + std::to_string(c.qubit_count()) + " qubits but only " +
                              std::to_string(n) + " are encrypted");
    }
    KeyTracker tracker(n);
    std::string unsupported;
    for (const auto& g : c.gates()) {
        if (!is_clifford_gate(g) && !is_gadget_gate(g)) {
            unsupported += (unsupported.empty() ? "" : "; ") + circuit::describe(g);
            continue;
        }
        if (unsupported.empty()) {
            tracker.apply(g);
        }
    }
    if (!unsupported.empty()) {
        throw ValidationError("gates outside the evaluation set: " + unsupported);
    }
    KeyUpdateProgram p;
    p.n = n;
    p.gadgets = tracker.gadgets();
    p.final_a = tracker.a();
    p.final_b = tracker.b();
    p.check_causality();
    return p;
}

FinalKey evaluate_final_key(const KeyUpdateProgram& p, const Bindings& bindings) {
    FinalKey k;
    for (const auto& x : p.final_a) {
        k.a.push_back(x.evaluate(bindings));
    }
    for (const auto& x : p.final_b) {
        k.b.push_back(x.evaluate(bindings));
    }
    return k;
}

std::size_t xor_count(const KeyPolynomial& p) {
    const std::size_t k = p.term_count();
    if (k == 0) {
        return 0;
    }
    return k - 1 + static_cast<std::size_t>(p.constant_bit());
}

nlohmann::json QuasiCompactnessMetrics::to_json() const {
    return {{"measurements", measurements},
            {"n", n},
            {"h_terms", h_terms},
            {"f_terms", f_terms},
            {"xor_count", xor_count},
            {"nlogn", nlogn},
            {"decryption_sum", decryption_sum},
            {"empirical_bound", empirical_bound},
            {"within_empirical_bound", within_empirical_bound()}};
}

QuasiCompactnessMetrics quasi_compactness_metrics(const KeyUpdateProgram& p) {
    QuasiCompactnessMetrics m;
    m.measurements = p.measurement_count();
    m.n = p.n;
    for (const auto& g : p.gadgets) {
        m.h_terms.push_back(g.h.term_count());
        m.xor_count += xor_count(g.h);
    }
    for (const auto* part : {&p.final_a, &p.final_b}) {
        for (const auto& f : *part) {
            m.f_terms.push_back(f.term_count());
            m.xor_count += xor_count(f);
        }
    }
    const double mn = static_cast<double>(m.measurements) + p.n;
    m.nlogn = mn > 0 ? mn * std::log2(mn) : 0.0;
    const double two_n = 2.0 * p.n;
    for (std::size_t i = 1; i <= m.measurements; ++i) {
        m.decryption_sum += std::log2(two_n + 2.0 * static_cast<double>(i - 1));
    }
    m.decryption_sum += two_n * std::log2(two_n + 2.0 * static_cast<double>(m.measurements));
    m.empirical_bound = 2.0 * mn * std::log2(mn + 2.0);
    return m;
}

}  // namespace qhedr::qhe
