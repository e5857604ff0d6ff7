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

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qhedr/experiments/experiments.hpp"
#include "qhedr/protocol/registry.hpp"

namespace fs = std::filesystem;
using qhedr::experiments::ExperimentConfig;
using qhedr::experiments::ExperimentReport;
using qhedr::experiments::OutputFormat;

namespace {

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

void emit(const ExperimentConfig& cfg, const ExperimentReport& report) {
    const std::string json = report.to_json().dump(2) + "\n";
    const std::string csv =
        report.histogram ? qhedr::experiments::histogram_csv(*report.histogram) : report.table_csv();
    if (cfg.out_dir.empty()) {
        std::cout << (cfg.format == OutputFormat::Json ? json : csv);
        return;
    }
    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);
    write_file(dir / (cfg.subcommand + ".json"), json);
    write_file(dir / (cfg.subcommand + (report.histogram ? "_histogram.csv" : ".csv")), csv);
    std::cout << cfg.subcommand << ": " << (report.pass() ? "pass" : "FAIL") << " -> " << dir.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum homomorphic encryption for dimensionality reduction: experiments"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string interpretation = "eq7";
    std::string output = "json";

    const std::vector<std::pair<std::string, std::string>> commands{
        {"qpce-demo", "Five-qubit extraction circuit: sampled amplitudes and fidelities"},
        {"multi-t-demo", "Two-T circuit H T H T under encryption: outcome table"},
        {"qotp-hiding", "Key-averaged ciphertexts against the maximally mixed state"},
        {"random-homomorphic", "Random Clifford+T+Ry circuits through the full protocol"},
        {"swap-trick", "Convergence of density-matrix exponentiation"},
        {"protocol", "Run one circuit file through the full protocol"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--shots", cfg.shots, "Measurement shots")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Root seed");
        sub->add_option("--tau", cfg.tau, "Eigenvalue threshold")->check(CLI::NonNegativeNumber);
        sub->add_option("--eta", cfg.eta, "Rotation scale")->check(CLI::PositiveNumber);
        sub->add_option("--precision-bits", cfg.precision_bits, "Eigen register width")->check(CLI::Range(1, 10));
        sub->add_option("--interpretation", interpretation, "Threshold weights")
            ->check(CLI::IsMember({"eq7", "paper", "subtractive", "ratio"}));
        sub->add_option("--output", output, "Stdout format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--rho", cfg.rho_path, "Operator CSV (re,im pairs per row)")->check(CLI::ExistingFile);
        sub->add_option("--circuit", cfg.circuit_path, "Circuit JSON")->check(CLI::ExistingFile);
        sub->add_option("--out", cfg.out_dir, "Directory for report files");
        sub->add_option("--trials", cfg.trials, "Circuits or plaintexts (0 = default)");
        sub->add_option("--max-qubits", cfg.max_qubits, "Largest register")->check(CLI::Range(1, 3));
        sub->add_flag("!--no-exhaustive", cfg.exhaustive, "Skip the outcome and key sweep");
    }

    CLI11_PARSE(app, argc, argv);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.interpretation = qhedr::qpce::parse_interpretation(interpretation);
    cfg.format = output == "csv" ? OutputFormat::Csv : OutputFormat::Json;

    try {
        const ExperimentReport report = qhedr::experiments::run_experiment(cfg);
        emit(cfg, report);
        return report.pass() ? 0 : 1;
    } catch (const qhedr::protocol::ProtocolError& e) {
        std::cerr << "protocol error [" << e.stage() << "]: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
