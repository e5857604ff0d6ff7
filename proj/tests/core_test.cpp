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

#include <gtest/gtest.h>

#include "qhedr/core/linalg.hpp"
#include "qhedr/core/sampling.hpp"
#include "qhedr/experiments/random_circuits.hpp"

namespace {

using namespace qhedr;
using core::DensityMatrix;
using core::StateVector;

TEST(StateVector, RejectsBadLengthAndNorm) {
    EXPECT_THROW(StateVector(CVector::Ones(3) / std::sqrt(3.0)), ValidationError);
    EXPECT_THROW(StateVector(CVector::Ones(2)), ValidationError);
    EXPECT_NO_THROW(StateVector::subnormalized(CVector::Ones(2) * 0.1));
}

TEST(StateVector, BasisIsLittleEndian) {
    const auto s = StateVector::basis(3, 0b101);
    EXPECT_EQ(s.qubit_count(), 3);
    EXPECT_DOUBLE_EQ(std::abs(s[5]), 1.0);
}

TEST(DensityMatrix, RejectsNonPhysical) {
    CMatrix m = CMatrix::Identity(2, 2);
    EXPECT_THROW(DensityMatrix{m}, ValidationError);  // trace 2
    CMatrix neg(2, 2);
    neg << 1.5, 0, 0, -0.5;
    EXPECT_THROW(DensityMatrix{neg}, ValidationError);
}

TEST(TensorProduct, FirstFactorIsHighIndex) {
    CVector a(2), b(2);
    a << 0, 1;
    b << 1, 0;
    const CVector ab = core::tensor_product(a, b);
    EXPECT_DOUBLE_EQ(std::abs(ab[2]), 1.0);
}

TEST(Eigendecompose, ExampleOperator) {
    CMatrix rho(2, 2);
    rho << 1.5, 0.5, 0.5, 1.5;
    const auto d = core::eigendecompose(rho);
    ASSERT_EQ(d.eigenvalues.size(), 2u);
    EXPECT_NEAR(d.eigenvalues[0], 2.0, 1e-12);
    EXPECT_NEAR(d.eigenvalues[1], 1.0, 1e-12);
    EXPECT_LT((d.reconstruct() - rho).norm(), 1e-12);
    EXPECT_GT(d.eigenvectors[0][0].real(), 0.0);
}

TEST(PartialTrace, ProductStateFactors) {
    Rng rng(3);
    const auto a = experiments::random_density(1, rng);
    const auto b = experiments::random_density(2, rng);
    const CMatrix ab = core::tensor_product(a.matrix(), b.matrix());
    const int high[] = {2};
    const int low[] = {0, 1};
    EXPECT_LT((core::partial_trace(ab, high) - b.matrix()).norm(), 1e-12);
    EXPECT_LT((core::partial_trace(ab, low) - a.matrix()).norm(), 1e-12);
    const int all[] = {0, 1, 2};
    EXPECT_THROW(core::partial_trace(ab, all), ValidationError);
}

TEST(TraceDistance, OrthogonalPureStatesAreOne) {
    const auto z = DensityMatrix::from_pure(StateVector::basis(1, 0));
    const auto o = DensityMatrix::from_pure(StateVector::basis(1, 1));
    EXPECT_NEAR(core::trace_distance(z.matrix(), o.matrix()), 1.0, 1e-12);
    EXPECT_NEAR(core::trace_distance(z.matrix(), z.matrix()), 0.0, 1e-12);
}

TEST(Fidelity, SquaredVersusUnsquared) {
    CVector a(2), b(2);
    a << 1, 0;
    b << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    EXPECT_NEAR(core::fidelity(a, b), 0.5, 1e-12);
    EXPECT_NEAR(core::overlap(a, b), 1 / std::sqrt(2.0), 1e-12);
}

TEST(GlobalPhase, EqualityIgnoresPhase) {
    Rng rng(1);
    const CVector v = experiments::random_state(2, rng).amplitudes();
    EXPECT_TRUE(core::equal_up_to_global_phase(v, v * std::polar(1.0, 0.7), 1e-12));
    EXPECT_FALSE(core::equal_up_to_global_phase(v, CVector(v.reverse()), 1e-6));
}

TEST(Sampling, DeterministicUnderSeed) {
    Rng rng(8);
    const auto s = experiments::random_state(3, rng);
    const int qs[] = {0, 1, 2};
    const auto h1 = core::sample_measurement(s, qs, 1000, 42);
    const auto h2 = core::sample_measurement(s, qs, 1000, 42);
    EXPECT_EQ(h1.counts, h2.counts);
    std::uint64_t total = 0;
    for (const auto& [k, v] : h1.counts) {
        EXPECT_EQ(k.size(), 3u);
        total += v;
    }
    EXPECT_EQ(total, 1000u);
}

TEST(Sampling, BitstringPutsLastQubitLeft) {
    // qubit 0 set, qubit 1 clear: measured list [0, 1] prints "01".
    const auto s = StateVector::basis(2, 1);
    const int qs[] = {0, 1};
    const auto h = core::sample_measurement(s, qs, 10, 1);
    EXPECT_EQ(h.count("01"), 10u);
}

TEST(Sampling, FrequenciesWithinThreeSigma) {
    CVector v(2);
    v << std::sqrt(0.3), std::sqrt(0.7);
    const int q[] = {0};
    const std::uint64_t shots = 20000;
    const auto h = core::sample_measurement(StateVector(v), q, shots, 5);
    const double sigma = std::sqrt(shots * 0.3 * 0.7);
    EXPECT_NEAR(static_cast<double>(h.count("0")), shots * 0.3, 3 * sigma);
}

TEST(Sampling, ZeroShotsRejected) {
    const int q[] = {0};
    EXPECT_THROW(core::sample_measurement(StateVector::zero(1), q, 0, 1), ValidationError);
}

}  // namespace
