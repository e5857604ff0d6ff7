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

#include "qhedr/qpce/dataset.hpp"

#include <cmath>
#include <string>

namespace qhedr::qpce {

namespace {

std::size_t padded_dimension(std::size_t n) {
    std::size_t d = 1;
    while (d < n) {
        d <<= 1;
    }
    return d;
}

}  // namespace

std::size_t Dataset::dimension() const {
    if (vectors.empty()) {
        throw ValidationError("dataset is empty");
    }
    const std::size_t n = vectors.front().size();
    if (n == 0) {
        throw ValidationError("dataset vectors must have dimension >= 1");
    }
    for (std::size_t k = 1; k < vectors.size(); ++k) {
        if (vectors[k].size() != n) {
            throw ValidationError("vector " + std::to_string(k) + " has dimension " +
                                  std::to_string(vectors[k].size()) + ", expected " + std::to_string(n));
        }
    }
    return n;
}

std::vector<double> Dataset::mean() const {
    const std::size_t n = dimension();
    std::vector<double> m(n, 0.0);
    for (const auto& v : vectors) {
        for (std::size_t i = 0; i < n; ++i) {
            m[i] += v[i];
        }
    }
    for (double& x : m) {
        x /= static_cast<double>(vectors.size());
    }
    return m;
}

Dataset standardize(const Dataset& d) {
    const auto m = d.mean();
    Dataset out;
    out.vectors.reserve(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
        std::vector<double> v = d.vectors[k];
        double norm2 = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] -= m[i];
            norm2 += v[i] * v[i];
        }
        if (norm2 < 1e-24) {
            throw ValidationError("vector " + std::to_string(k) + " is zero after centering");
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& x : v) {
            x *= inv;
        }
        out.vectors.push_back(std::move(v));
    }
    return out;
}

StateVector amplitude_encode(std::span<const double> v) {
    if (v.empty()) {
        throw ValidationError("cannot encode an empty vector");
    }
    double norm2 = 0.0;
    for (double x : v) {
        norm2 += x * x;
    }
    if (norm2 < 1e-24) {
        throw ValidationError("cannot encode the zero vector");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(padded_dimension(v.size())));
    for (std::size_t i = 0; i < v.size(); ++i) {
        amps[static_cast<Eigen::Index>(i)] = v[i] * inv;
    }
    return StateVector(std::move(amps));
}

DensityMatrix covariance_density(const Dataset& d) {
    const std::size_t n = d.dimension();
    const auto dim = static_cast<Eigen::Index>(padded_dimension(n));
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < d.size(); ++k) {
        const auto& v = d.vectors[k];
        double norm2 = 0.0;
        for (double x : v) {
            norm2 += x * x;
        }
        if (std::abs(norm2 - 1.0) > kNormTolerance) {
            throw ValidationError("vector " + std::to_string(k) + " is not unit norm; standardize first");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += v[i] * v[j];
            }
        }
    }
    rho /= static_cast<double>(d.size());
    return DensityMatrix(std::move(rho));
}

}  // namespace qhedr::qpce
