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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qhedr/core/sampling.hpp"
#include "qhedr/qpce/qpce.hpp"

namespace qhedr::experiments {

enum class OutputFormat { Json, Csv };

struct ExperimentConfig {
    std::string subcommand;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 2024;
    double tau = 0.8;
    double eta = 1.0;
    int precision_bits = 2;
    qpce::Interpretation interpretation = qpce::Interpretation::Subtractive;
    OutputFormat format = OutputFormat::Json;
    std::string rho_path;
    std::string circuit_path;
    std::string out_dir;
    int trials = 0;          // circuits or plaintexts; 0 picks the subcommand default
    int max_qubits = 3;
    bool exhaustive = true;  // multi-t-demo: also sweep all outcomes and keys

    void validate() const;
    nlohmann::json to_json() const;
};

/// Named pass/fail entry of a report.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// One machine-readable run: config echo, results, checks. `table` holds the
/// CSV rendering (header first) and `histogram` the raw counts if any.
struct ExperimentReport {
    std::string subcommand;
    nlohmann::json config;
    nlohmann::json results = nlohmann::json::object();
    std::vector<Check> checks;
    std::vector<std::vector<std::string>> table;
    std::optional<core::MeasurementHistogram> histogram;

    bool pass() const;
    const Check* find(const std::string& name) const;
    nlohmann::json to_json() const;
    std::string table_csv() const;
};

/// `bitstring,count` rows, bitstrings in lexicographic order.
std::string histogram_csv(const core::MeasurementHistogram& h);
core::MeasurementHistogram parse_histogram_csv(const std::string& text);

/// One row of the two-T outcome table for a fixed initial key.
struct MultiTRow {
    int a0 = 0;
    int b0 = 0;
    std::array<int, 4> outcomes{};  // (r_a(2), r_b(2), r_a(1), r_b(1))
    int a_final = 0;
    int b_final = 0;
    int raw_q0 = 0;                  // most likely ciphertext readout
    double p_decrypted_zero = 0.0;   // probability the decrypted q0 reads 0
    double plaintext_fidelity = 0.0; // decrypted state vs H T H T |0>
    double branch_probability = 0.0;
};

/// Runs H T H T on |0> under key (a0, b0) with the gadget outcomes forced.
MultiTRow multi_t_row(int a0, int b0, const std::array<int, 4>& outcomes);

/// The four rows listed for (a0, b0) = (1, 1) with their expected final key and raw q0.
struct MultiTReference {
    std::array<int, 4> outcomes;
    int a_final;
    int b_final;
    int raw_q0;
};
const std::vector<MultiTReference>& multi_t_reference_rows();

/// Per-halving ratios and the convergence tables of the swap trick.
struct SwapTrickStudy {
    std::vector<double> dts;
    std::vector<double> step_errors;         // vs exact e^{-i rho dt} sigma e^{i rho dt}
    std::vector<double> first_order_errors;  // vs sigma - i dt [rho, sigma]
    std::vector<double> step_ratios;
    std::vector<int> step_counts;
    std::vector<double> global_errors;
    std::vector<double> global_ratios;
};
SwapTrickStudy swap_trick_study(const CMatrix& rho, const CMatrix& sigma, double total_time);

ExperimentReport cmd_qpce_demo(const ExperimentConfig& cfg);
ExperimentReport cmd_multi_t_demo(const ExperimentConfig& cfg);
ExperimentReport cmd_qotp_hiding(const ExperimentConfig& cfg);
ExperimentReport cmd_random_homomorphic(const ExperimentConfig& cfg);
ExperimentReport cmd_swap_trick(const ExperimentConfig& cfg);
/// Full protocol on --circuit with --rho (or |0...0>) as plaintext.
ExperimentReport cmd_protocol(const ExperimentConfig& cfg);

/// Dispatches on cfg.subcommand.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Seed of trial `index` derived from the root seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

}  // namespace qhedr::experiments
