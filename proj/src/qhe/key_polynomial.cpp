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

#include "qhedr/qhe/key_polynomial.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "qhedr/core/types.hpp"

namespace qhedr::qhe {

std::string Symbol::name() const {
    switch (kind) {
        case Kind::A0:
            return "a0[" + std::to_string(index) + "]";
        case Kind::B0:
            return "b0[" + std::to_string(index) + "]";
        case Kind::Ra:
            return "ra(" + std::to_string(index) + ")";
        case Kind::Rb:
            return "rb(" + std::to_string(index) + ")";
    }
    return "?";
}

Symbol Symbol::parse(const std::string& s) {
    static const std::regex initial(R"(([ab])0\[(\d+)\])");
    static const std::regex outcome(R"(r([ab])\((\d+)\))");
    std::smatch m;
    if (std::regex_match(s, m, initial)) {
        const int q = std::stoi(m[2]);
        return m[1] == "a" ? a0(q) : b0(q);
    }
    if (std::regex_match(s, m, outcome)) {
        const int i = std::stoi(m[2]);
        if (i < 1) {
            throw ValidationError("gadget indices start at 1: '" + s + "'");
        }
        return m[1] == "a" ? ra(i) : rb(i);
    }
    throw ValidationError("unknown key symbol '" + s + "'");
}

KeyPolynomial KeyPolynomial::constant(int bit) {
    KeyPolynomial p;
    p.constant_ = bit & 1;
    return p;
}

KeyPolynomial& KeyPolynomial::operator^=(const KeyPolynomial& other) {
    constant_ ^= other.constant_;
    for (const auto& s : other.terms_) {
        // x + x = 0 over GF(2)
        if (!terms_.erase(s)) {
            terms_.insert(s);
        }
    }
    return *this;
}

int KeyPolynomial::max_outcome_index() const {
    int m = 0;
    for (const auto& s : terms_) {
        if (s.is_outcome()) {
            m = std::max(m, s.index);
        }
    }
    return m;
}

int KeyPolynomial::evaluate(const Bindings& bindings) const {
    int v = constant_;
    for (const auto& s : terms_) {
        auto it = bindings.find(s);
        if (it == bindings.end()) {
            throw ValidationError("unbound key symbol " + s.name());
        }
        v ^= it->second & 1;
    }
    return v;
}

std::string KeyPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : terms_) {
        os << (first ? "" : " + ") << s.name();
        first = false;
    }
    if (constant_ || first) {
        os << (first ? "" : " + ") << constant_;
    }
    return os.str();
}

nlohmann::json KeyPolynomial::to_json() const {
    std::vector<std::string> names;
    for (const auto& s : terms_) {
        names.push_back(s.name());
    }
    return {{"const", constant_}, {"terms", names}};
}

KeyPolynomial KeyPolynomial::from_json(const nlohmann::json& j) {
    try {
        const int c = j.at("const").get<int>();
        if (c != 0 && c != 1) {
            throw ValidationError("polynomial constant must be 0 or 1");
        }
        KeyPolynomial p = constant(c);
        for (const auto& t : j.at("terms")) {
            const Symbol s = Symbol::parse(t.get<std::string>());
            if (p.terms_.count(s)) {
                throw ValidationError("duplicate term " + s.name());
            }
            p.terms_.insert(s);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed key polynomial: ") + e.what());
    }
}

int evaluate_key_polynomial(const KeyPolynomial& p, const Bindings& bindings) {
    return p.evaluate(bindings);
}

Bindings key_bindings(const std::vector<int>& a0, const std::vector<int>& b0) {
    Bindings b;
    for (std::size_t q = 0; q < a0.size(); ++q) {
        b[Symbol::a0(static_cast<int>(q))] = a0[q] & 1;
    }
    for (std::size_t q = 0; q < b0.size(); ++q) {
        b[Symbol::b0(static_cast<int>(q))] = b0[q] & 1;
    }
    return b;
}

}  // namespace qhedr::qhe
