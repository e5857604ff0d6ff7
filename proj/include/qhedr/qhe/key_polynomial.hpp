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

#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace qhedr::qhe {

/// Variable of the key algebra: an initial key bit a0[q] / b0[q] or the
/// Bell outcome ra(i) / rb(i) of gadget i (1-based).
struct Symbol {
    enum class Kind { A0, B0, Ra, Rb };
    Kind kind = Kind::A0;
    int index = 0;

    static Symbol a0(int q) { return {Kind::A0, q}; }
    static Symbol b0(int q) { return {Kind::B0, q}; }
    static Symbol ra(int i) { return {Kind::Ra, i}; }
    static Symbol rb(int i) { return {Kind::Rb, i}; }

    bool is_outcome() const { return kind == Kind::Ra || kind == Kind::Rb; }
    std::string name() const;  // "a0[0]", "rb(2)", ...
    static Symbol parse(const std::string& s);

    auto operator<=>(const Symbol&) const = default;
};

using Bindings = std::map<Symbol, int>;

/// Affine form over GF(2): constant XOR the listed symbols.
class KeyPolynomial {
  public:
    KeyPolynomial() = default;
    explicit KeyPolynomial(Symbol s) { terms_.insert(s); }
    static KeyPolynomial constant(int bit);

    KeyPolynomial& operator^=(const KeyPolynomial& other);
    friend KeyPolynomial operator^(KeyPolynomial a, const KeyPolynomial& b) { return a ^= b; }
    bool operator==(const KeyPolynomial&) const = default;

    int constant_bit() const { return constant_; }
    const std::set<Symbol>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest gadget index among the outcome terms, 0 if none.
    int max_outcome_index() const;

    /// Throws ValidationError naming the first unbound symbol.
    int evaluate(const Bindings& bindings) const;

    std::string to_string() const;  // "a0[0] + rb(1) + 1"
    nlohmann::json to_json() const;
    static KeyPolynomial from_json(const nlohmann::json& j);

  private:
    int constant_ = 0;
    std::set<Symbol> terms_;
};

int evaluate_key_polynomial(const KeyPolynomial& p, const Bindings& bindings);

/// a0/b0 bindings for an n-qubit key.
Bindings key_bindings(const std::vector<int>& a0, const std::vector<int>& b0);

}  // namespace qhedr::qhe
