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

#include "qhedr/circuit/deferred_simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "qhedr/core/linalg.hpp"
#include "qhedr/core/sampling.hpp"

namespace qhedr::circuit {

DeferredSimulator::DeferredSimulator(Mode mode, int max_live_qubits)
    : mode_(mode), max_live_(max_live_qubits), amps_(CVector::Ones(1)) {}

bool DeferredSimulator::is_measured(int qubit) const {
    return std::find(measured_.begin(), measured_.end(), qubit) != measured_.end();
}

void DeferredSimulator::apply(const Gate& g) {
    validate(g);
    for (int q : g.qubits()) {
        if (is_measured(q)) {
            throw ValidationError("gate " + describe(g) + " touches measured qubit " + std::to_string(q));
        }
    }
    if (mode_ == Mode::Eager) {
        execute(g);
    } else {
        pending_.push_back(g);
    }
}

int DeferredSimulator::find_position(int qubit) const {
    auto it = std::find(order_.begin(), order_.end(), qubit);
    return it == order_.end() ? -1 : static_cast<int>(it - order_.begin());
}

int DeferredSimulator::position_of(int qubit) {
    int pos = find_position(qubit);
    if (pos >= 0) {
        return pos;
    }
    if (static_cast<int>(order_.size()) >= max_live_) {
        throw std::runtime_error("simulator exceeded " + std::to_string(max_live_) + " live qubits");
    }
    // New qubit in |0> becomes the new high bit: lower half keeps the old amplitudes.
    CVector grown = CVector::Zero(amps_.size() * 2);
    grown.head(amps_.size()) = amps_;
    amps_ = std::move(grown);
    order_.push_back(qubit);
    peak_ = std::max(peak_, static_cast<int>(order_.size()));
    return static_cast<int>(order_.size()) - 1;
}

void DeferredSimulator::execute(const Gate& g) {
    Gate local = g;
    for (int& q : local.targets) {
        q = position_of(q);
    }
    for (int& q : local.controls) {
        q = position_of(q);
    }
    apply_gate(amps_, local);
}

void DeferredSimulator::run_cone(std::span<const int> qubits) {
    std::set<int> cone(qubits.begin(), qubits.end());
    std::vector<bool> take(pending_.size(), false);
    for (std::size_t i = pending_.size(); i-- > 0;) {
        const auto qs = pending_[i].qubits();
        if (std::any_of(qs.begin(), qs.end(), [&](int q) { return cone.count(q) > 0; })) {
            take[i] = true;
            cone.insert(qs.begin(), qs.end());
        }
    }
    // Gates left behind act on qubits disjoint from every later gate taken,
    // so running the cone first is a reordering of commuting operations.
    std::vector<Gate> rest;
    for (std::size_t i = 0; i < pending_.size(); ++i) {
        if (take[i]) {
            execute(pending_[i]);
        } else {
            rest.push_back(std::move(pending_[i]));
        }
    }
    pending_ = std::move(rest);
}

void DeferredSimulator::flush() {
    for (const auto& g : pending_) {
        execute(g);
    }
    pending_.clear();
}

void DeferredSimulator::prepare(std::span<const int> qubits, const StateVector& state) {
    if (static_cast<int>(qubits.size()) != state.qubit_count()) {
        throw ValidationError("prepare: state width does not match the qubit list");
    }
    for (int q : qubits) {
        if (find_position(q) >= 0 || is_measured(q)) {
            throw ValidationError("prepare: qubit " + std::to_string(q) + " is not fresh");
        }
        for (const auto& g : pending_) {
            const auto qs = g.qubits();
            if (std::find(qs.begin(), qs.end(), q) != qs.end()) {
                throw ValidationError("prepare: qubit " + std::to_string(q) + " already has queued gates");
            }
        }
    }
    if (static_cast<int>(order_.size() + qubits.size()) > max_live_) {
        throw std::runtime_error("simulator exceeded " + std::to_string(max_live_) + " live qubits");
    }
    // The prepared block sits above the existing qubits.
    amps_ = core::tensor_product(state.amplitudes(), amps_);
    order_.insert(order_.end(), qubits.begin(), qubits.end());
    peak_ = std::max(peak_, static_cast<int>(order_.size()));
}

double DeferredSimulator::collapse(std::span<const int> qubits, std::span<const int> bits) {
    std::vector<int> pos;
    for (int q : qubits) {
        pos.push_back(position_of(q));
    }
    std::size_t fixed_mask = 0;
    std::size_t fixed_bits = 0;
    for (std::size_t j = 0; j < pos.size(); ++j) {
        fixed_mask |= std::size_t{1} << pos[j];
        if (bits[j]) {
            fixed_bits |= std::size_t{1} << pos[j];
        }
    }
    double p = 0.0;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if ((static_cast<std::size_t>(i) & fixed_mask) == fixed_bits) {
            p += std::norm(amps_[i]);
        }
    }
    if (p < kBranchFloor) {
        throw ValidationError("post-selection impossible: branch probability " + std::to_string(p));
    }
    std::vector<int> keep_pos;
    std::vector<int> keep_ids;
    for (int k = 0; k < static_cast<int>(order_.size()); ++k) {
        if (!((fixed_mask >> k) & 1U)) {
            keep_pos.push_back(k);
            keep_ids.push_back(order_[static_cast<std::size_t>(k)]);
        }
    }
    CVector out = CVector::Zero(Eigen::Index{1} << keep_pos.size());
    const double scale = 1.0 / std::sqrt(p);
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if ((idx & fixed_mask) != fixed_bits) {
            continue;
        }
        std::size_t compact = 0;
        for (std::size_t k = 0; k < keep_pos.size(); ++k) {
            compact |= ((idx >> keep_pos[k]) & 1U) << k;
        }
        out[static_cast<Eigen::Index>(compact)] = amps_[i] * scale;
    }
    amps_ = std::move(out);
    order_ = std::move(keep_ids);
    measured_.insert(measured_.end(), qubits.begin(), qubits.end());
    return p;
}

std::vector<int> DeferredSimulator::measure(std::span<const int> qubits, Rng& rng) {
    for (int q : qubits) {
        if (is_measured(q)) {
            throw ValidationError("qubit " + std::to_string(q) + " was already measured");
        }
    }
    run_cone(qubits);
    std::vector<int> pos;
    for (int q : qubits) {
        pos.push_back(position_of(q));
    }
    const auto probs = core::marginal_probabilities(amps_, pos);
    std::vector<double> cumulative(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cumulative.begin());
    const std::size_t outcome = core::sample_index(cumulative, rng);
    std::vector<int> bits(qubits.size());
    for (std::size_t j = 0; j < bits.size(); ++j) {
        bits[j] = static_cast<int>((outcome >> j) & 1U);
    }
    collapse(qubits, bits);
    return bits;
}

double DeferredSimulator::force(std::span<const int> qubits, std::span<const int> bits) {
    if (qubits.size() != bits.size()) {
        throw ValidationError("force: qubit and bit lists differ in length");
    }
    for (int q : qubits) {
        if (is_measured(q)) {
            throw ValidationError("qubit " + std::to_string(q) + " was already measured");
        }
    }
    run_cone(qubits);
    return collapse(qubits, bits);
}

CMatrix DeferredSimulator::reduced_density(std::span<const int> qubits) {
    run_cone(qubits);
    std::vector<int> pos;
    for (int q : qubits) {
        pos.push_back(position_of(q));
    }
    const Eigen::Index sub = Eigen::Index{1} << pos.size();
    std::size_t sub_mask = 0;
    for (int p : pos) {
        sub_mask |= std::size_t{1} << p;
    }
    // Group amplitudes by the traced-out index, then accumulate outer products.
    const std::size_t rest_count = static_cast<std::size_t>(amps_.size()) >> pos.size();
    CMatrix blocks = CMatrix::Zero(sub, static_cast<Eigen::Index>(rest_count));
    std::vector<int> rest_pos;
    for (int k = 0; k < static_cast<int>(order_.size()); ++k) {
        if (!((sub_mask >> k) & 1U)) {
            rest_pos.push_back(k);
        }
    }
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        std::size_t s = 0;
        for (std::size_t j = 0; j < pos.size(); ++j) {
            s |= ((idx >> pos[j]) & 1U) << j;
        }
        std::size_t r = 0;
        for (std::size_t j = 0; j < rest_pos.size(); ++j) {
            r |= ((idx >> rest_pos[j]) & 1U) << j;
        }
        blocks(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(r)) = amps_[i];
    }
    return blocks * blocks.adjoint();
}

StateVector DeferredSimulator::statevector(std::span<const int> qubits) {
    flush();
    if (qubits.size() != order_.size()) {
        throw ValidationError("statevector: the qubit list must cover every live qubit");
    }
    std::vector<int> pos;
    for (int q : qubits) {
        int p = find_position(q);
        if (p < 0) {
            throw ValidationError("statevector: qubit " + std::to_string(q) + " is not live");
        }
        pos.push_back(p);
    }
    CVector out(amps_.size());
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        std::size_t s = 0;
        for (std::size_t j = 0; j < pos.size(); ++j) {
            s |= ((static_cast<std::size_t>(i) >> pos[j]) & 1U) << j;
        }
        out[static_cast<Eigen::Index>(s)] = amps_[i];
    }
    out /= out.norm();
    return StateVector(std::move(out));
}

}  // namespace qhedr::circuit
