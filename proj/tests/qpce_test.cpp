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
#include <sstream>

#include <gtest/gtest.h>

#include "qhedr/circuit/simulate.hpp"
#include "qhedr/core/linalg.hpp"
#include "qhedr/core/sampling.hpp"
#include "qhedr/experiments/random_circuits.hpp"
#include "qhedr/qpce/dataset.hpp"
#include "qhedr/qpce/io.hpp"
#include "qhedr/qpce/phase_estimation.hpp"
#include "qhedr/qpce/qpce.hpp"
#include "qhedr/qpce/swap_trick.hpp"

namespace {

using namespace qhedr;
using std::numbers::pi;

CMatrix example() {
    CMatrix rho(2, 2);
    rho << 1.5, 0.5, 0.5, 1.5;
    return rho;
}

TEST(Dataset, StandardizeCentersAndNormalizes) {
    qpce::Dataset d{{{1, 2}, {3, 4}, {2, 0}}};
    const auto s = qpce::standardize(d);
    for (const auto& v : s.vectors) {
        EXPECT_NEAR(std::hypot(v[0], v[1]), 1.0, 1e-12);
    }
    EXPECT_THROW(qpce::standardize(qpce::Dataset{{{1, 1}, {1, 1}}}), ValidationError);
}

TEST(Dataset, MismatchedDimensionsRejected) {
    EXPECT_THROW((qpce::Dataset{{{1, 2}, {1}}}).dimension(), ValidationError);
}

TEST(Dataset, AmplitudeEncodePads) {
    const std::vector<double> v{3, 4, 0};
    const auto s = qpce::amplitude_encode(v);
    EXPECT_EQ(s.dimension(), 4u);
    EXPECT_NEAR(s[0].real(), 0.6, 1e-12);
}

TEST(Dataset, CovarianceIsDensity) {
    qpce::Dataset d{{{1, 0, 0}, {0, 1, 0}, {0, 0.6, 0.8}}};
    const auto rho = qpce::covariance_density(d);
    EXPECT_EQ(rho.dimension(), 4u);
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
}

TEST(SwapTrick, DtZeroIsIdentity) {
    Rng rng(1);
    const auto rho = experiments::random_density(1, rng);
    const auto sigma = experiments::random_density(1, rng);
    EXPECT_LT((qpce::swap_trick_step(rho.matrix(), sigma.matrix(), 0.0) - sigma.matrix()).norm(), 1e-15);
}

TEST(SwapTrick, StepPreservesTraceAndHermiticity) {
    Rng rng(2);
    const auto rho = experiments::random_density(2, rng);
    const auto sigma = experiments::random_density(2, rng);
    const auto out = qpce::swap_trick_step(rho, sigma, 0.3);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
}

TEST(SwapTrick, ExponentialIsUnitary) {
    const CMatrix u = qpce::hamiltonian_exponential(example(), 0.7);
    EXPECT_LT((u * u.adjoint() - CMatrix::Identity(2, 2)).norm(), 1e-12);
}

TEST(PhaseEstimation, ConfigValidation) {
    EXPECT_THROW((qpce::PhaseEstimationConfig{0, 1.0}).validate(), ValidationError);
    EXPECT_EQ((qpce::PhaseEstimationConfig{3, 1.0}).slice_count(), 8u);
}

TEST(PhaseEstimation, QftMatchesDefinition) {
    const std::vector<int> reg{0, 1, 2};
    const CMatrix u = circuit::circuit_unitary(qpce::build_qft(reg, 3));
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            const Complex want = std::polar(1.0 / std::sqrt(8.0), 2 * pi * x * y / 8.0);
            EXPECT_LT(std::abs(u(x, y) - want), 1e-12);
        }
    }
    const CMatrix inv = circuit::circuit_unitary(qpce::build_inverse_qft(reg, 3));
    EXPECT_LT((inv * u - CMatrix::Identity(8, 8)).norm(), 1e-12);
}

TEST(PhaseEstimation, EigenvectorsReadExactRegister) {
    const qpce::PhaseEstimationConfig pe{2, 2 * pi};
    const auto est = qpce::build_phase_estimation(example(), pe);
    const auto dec = core::eigendecompose(example());
    const int reg[] = {1, 2};
    for (std::size_t k = 0; k < 2; ++k) {
        const CVector in = core::tensor_product(core::StateVector::zero(2).amplitudes(), dec.eigenvectors[k]);
        const auto out = circuit::simulate_statevector(est, core::StateVector(in));
        const auto p = core::marginal_probabilities(out.amplitudes(), reg);
        EXPECT_NEAR(p[static_cast<std::size_t>(std::lround(dec.eigenvalues[k]))], 1.0, 1e-12);
    }
    EXPECT_NEAR(qpce::quantization_report(example(), pe).max_phase_error, 0.0, 1e-12);
}

TEST(PhaseEstimation, OffGridEigenvaluesWarn) {
    CMatrix rho(2, 2);
    rho << 0.7, 0, 0, 0.3;
    const auto rep = qpce::quantization_report(rho, {2, 2 * pi});
    EXPECT_GT(rep.max_phase_error, 0.1);
    EXPECT_FALSE(rep.warnings.empty());
}

TEST(Threshold, AmplitudesPerInterpretation) {
    qpce::ThresholdConfig sub{0.8, 1.0, qpce::Interpretation::Subtractive};
    qpce::ThresholdConfig ratio{0.8, 1.0, qpce::Interpretation::Ratio};
    EXPECT_NEAR(sub.ancilla_amplitude(2.0), 0.6, 1e-12);
    EXPECT_NEAR(ratio.ancilla_amplitude(2.0), 0.3, 1e-12);
    EXPECT_EQ(sub.ancilla_amplitude(0.5), 0.0);
    EXPECT_EQ(qpce::parse_interpretation("paper"), qpce::Interpretation::Ratio);
    EXPECT_THROW(qpce::parse_interpretation("other"), ValidationError);
}

TEST(Threshold, EtaTooLargeRejected) {
    qpce::ThresholdConfig cfg{0.0, 5.0, qpce::Interpretation::Ratio};
    EXPECT_THROW(qpce::build_threshold_rotation(cfg, 2), ValidationError);
}

TEST(Qpce, ExampleSubtractiveTarget) {
    const auto r = qpce::run_qpce(example(), {0.8, 1.0, qpce::Interpretation::Subtractive});
    const CVector& v = r.output_state.amplitudes();
    const double want[] = {0.575396, 0.410997, 0.410997, 0.575396};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(v[i].real(), want[i], 1e-6);
    }
    EXPECT_NEAR(r.register_readout.at("10"), 0.973, 1e-3);
    EXPECT_NEAR(r.register_readout.at("01"), 0.027, 1e-3);
}

TEST(Qpce, ExampleRatioTarget) {
    const auto r = qpce::run_qpce(example(), {0.8, 1.0, qpce::Interpretation::Ratio});
    EXPECT_NEAR(r.output_state[0].real(), 0.632456, 1e-6);
    EXPECT_NEAR(r.output_state[1].real(), 0.316228, 1e-6);
}

TEST(Qpce, TauAboveSpectrumIsImpossible) {
    try {
        qpce::run_qpce(example(), {2.5, 1.0, qpce::Interpretation::Subtractive});
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("post-selection impossible"), std::string::npos);
    }
}

TEST(Qpce, OracleAgreesOnRandomGridOperators) {
    Rng rng(9);
    const qpce::PhaseEstimationConfig pe{3, 8 * pi};
    for (int i = 0; i < 20; ++i) {
        const CVector v = experiments::random_state(1, rng).amplitudes();
        CVector w(2);
        w << -std::conj(v[1]), std::conj(v[0]);
        const CMatrix rho = 0.75 * v * v.adjoint() + 0.25 * w * w.adjoint();
        qpce::ThresholdConfig th{uniform01(rng) * 0.75, 1.0, qpce::Interpretation::Subtractive};
        const auto r = qpce::run_qpce(rho, th, pe);
        EXPECT_GE(core::fidelity(r.output_state.amplitudes(), qpce::classical_pca_oracle(rho, th)), 0.999);
    }
}

TEST(Qpce, EncodeOperatorRowMajor) {
    CMatrix m(2, 2);
    m << 1, 2, 3, 4;
    const auto s = qpce::encode_operator(m);
    EXPECT_NEAR(s[1].real() / s[0].real(), 2.0, 1e-12);
    EXPECT_NEAR(s[2].real() / s[0].real(), 3.0, 1e-12);
}

TEST(Io, OperatorCsvRoundTrip) {
    CMatrix m(2, 2);
    m << Complex(1, 0), Complex(0.5, -0.25), Complex(0.5, 0.25), Complex(2, 0);
    std::stringstream ss;
    qpce::write_operator_csv(ss, m);
    EXPECT_LT((qpce::read_operator_csv(ss) - m).norm(), 1e-15);
}

TEST(Io, DatasetCsv) {
    std::stringstream ss("# header\n1,2\n\n3,4\n");
    const auto d = qpce::read_dataset_csv(ss);
    EXPECT_EQ(d.size(), 2u);
    EXPECT_EQ(d.dimension(), 2u);
}

}  // namespace
