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

#include "qhedr/experiments/experiments.hpp"
#include "qhedr/experiments/random_circuits.hpp"

namespace {

using namespace qhedr;
using experiments::ExperimentConfig;

ExperimentConfig config(const std::string& sub) {
    ExperimentConfig c;
    c.subcommand = sub;
    return c;
}

TEST(Config, Validation) {
    auto c = config("qpce-demo");
    c.tau = -1;
    EXPECT_THROW(c.validate(), ValidationError);
    c = config("qpce-demo");
    c.shots = 0;
    EXPECT_THROW(c.validate(), ValidationError);
    EXPECT_THROW(experiments::run_experiment(config("nope")), ValidationError);
}

TEST(RandomCircuits, RespectLimits) {
    for (int i = 0; i < 200; ++i) {
        Rng rng(i);
        const auto c = experiments::random_circuit({}, rng);
        EXPECT_LE(c.qubit_count(), 3);
        EXPECT_LE(c.size(), 12u);
        EXPECT_LE(c.t_positions().size(), 4u);
    }
}

TEST(QpceDemo, ReportShapeAndDeterminism) {
    auto c = config("qpce-demo");
    c.shots = 4096;
    const auto r1 = experiments::cmd_qpce_demo(c);
    const auto r2 = experiments::cmd_qpce_demo(c);
    EXPECT_EQ(r1.to_json(), r2.to_json());
    EXPECT_TRUE(r1.pass());
    const auto& f = r1.results["extraction"];
    EXPECT_EQ(f["postselect_keys"].size(), 4u);
    EXPECT_TRUE(f.contains("vs_theory_target"));
    EXPECT_TRUE(f.contains("vs_subtractive_target"));
    EXPECT_TRUE(f.contains("vs_measured_reference"));
    EXPECT_DOUBLE_EQ(f["hardware_fidelity_reference"].get<double>(), 0.9870);
}

TEST(QpceDemo, EstimateConvergesWithShots) {
    auto c = config("qpce-demo");
    c.shots = 200000;
    const auto r = experiments::cmd_qpce_demo(c);
    const auto& f = r.results["extraction"];
    const double survived = f["survived_shots"].get<double>();
    for (int i = 0; i < 4; ++i) {
        const double p = std::pow(f["exact_amplitudes"][i][0].get<double>(), 2);
        const double est = std::pow(f["estimated_amplitudes_sqrt_frequency"][i].get<double>(), 2);
        EXPECT_NEAR(est, p, 3 * std::sqrt(p * (1 - p) / survived) + 1e-12);
    }
}

TEST(Histogram, CsvRoundTrip) {
    core::MeasurementHistogram h;
    h.counts = {{"001", 5}, {"110", 7}};
    h.shots = 12;
    const auto back = experiments::parse_histogram_csv(experiments::histogram_csv(h));
    EXPECT_EQ(back.counts, h.counts);
    EXPECT_EQ(back.shots, 12u);
    EXPECT_THROW(experiments::parse_histogram_csv("bits,n\n"), ValidationError);
    EXPECT_THROW(experiments::parse_histogram_csv("bitstring,count\n0a1,3\n"), ValidationError);
}

TEST(MultiT, ListedRowsKeys) {
    for (const auto& ref : experiments::multi_t_reference_rows()) {
        const auto row = experiments::multi_t_row(1, 1, ref.outcomes);
        EXPECT_EQ(row.a_final, ref.a_final);
        EXPECT_EQ(row.b_final, ref.b_final);
        EXPECT_EQ(row.raw_q0, ref.raw_q0);
        EXPECT_NEAR(row.plaintext_fidelity, 1.0, 1e-10);
        EXPECT_NEAR(row.branch_probability, 1.0 / 16.0, 1e-12);
    }
}

TEST(MultiT, ReportFlagsNonDeterministicReadout) {
    auto c = config("multi-t-demo");
    c.shots = 32;
    const auto r = experiments::cmd_multi_t_demo(c);
    EXPECT_TRUE(r.find("listed_rows_final_key")->pass);
    EXPECT_TRUE(r.find("exhaustive_decrypts_to_plaintext")->pass);
    // H T H T |0> is not a basis state, so this check cannot hold.
    EXPECT_FALSE(r.find("decrypted_q0_always_zero")->pass);
    EXPECT_EQ(r.table.size(), 65u);
}

TEST(QotpHiding, SmallRun) {
    auto c = config("qotp-hiding");
    c.trials = 4;
    const auto r = experiments::cmd_qotp_hiding(c);
    EXPECT_TRUE(r.pass());
    EXPECT_LT(r.results["zero_state_deviation"].get<double>(), 1e-10);
}

TEST(RandomHomomorphic, SmallRun) {
    auto c = config("random-homomorphic");
    c.trials = 20;
    const auto r = experiments::cmd_random_homomorphic(c);
    EXPECT_TRUE(r.pass()) << r.to_json().dump(2);
    EXPECT_EQ(r.results["circuits"].get<int>(), 20);
}

TEST(SwapTrick, Report) {
    const auto r = experiments::cmd_swap_trick(config("swap-trick"));
    EXPECT_TRUE(r.pass()) << r.to_json().dump(2);
    EXPECT_EQ(r.table[1][0], "0");
}

TEST(DeriveSeed, DistinctPerIndex) {
    EXPECT_NE(experiments::derive_seed(1, 0), experiments::derive_seed(1, 1));
    EXPECT_EQ(experiments::derive_seed(9, 3), experiments::derive_seed(9, 3));
}

}  // namespace
