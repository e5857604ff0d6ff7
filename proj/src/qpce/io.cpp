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

#include "qhedr/qpce/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace qhedr::qpce {

namespace {

std::vector<std::vector<double>> read_rows(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') {
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t\r", used) != std::string::npos) {
                    throw std::invalid_argument(cell);
                }
            } catch (const std::exception&) {
                throw ValidationError("line " + std::to_string(lineno) + ": '" + cell + "' is not a number");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

CMatrix read_operator_csv(std::istream& in) {
    const auto rows = read_rows(in);
    const auto dim = static_cast<Eigen::Index>(rows.size());
    if (dim == 0) {
        throw ValidationError("operator file has no rows");
    }
    CMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (static_cast<Eigen::Index>(row.size()) != 2 * dim) {
            throw ValidationError("operator row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                  " columns, expected " + std::to_string(2 * dim));
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = Complex(row[static_cast<std::size_t>(2 * c)], row[static_cast<std::size_t>(2 * c + 1)]);
        }
    }
    return m;
}

CMatrix load_operator_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path.string());
    }
    return read_operator_csv(in);
}

void write_operator_csv(std::ostream& out, const CMatrix& m) {
    out << std::setprecision(17);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << (c ? "," : "") << m(r, c).real() << ',' << m(r, c).imag();
        }
        out << '\n';
    }
}

Dataset read_dataset_csv(std::istream& in) {
    Dataset d;
    d.vectors = read_rows(in);
    d.dimension();
    return d;
}

Dataset load_dataset_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path.string());
    }
    return read_dataset_csv(in);
}

nlohmann::json vector_to_json(const CVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back({v[i].real(), v[i].imag()});
    }
    return out;
}

nlohmann::json qpce_result_to_json(const QpceResult& r) {
    return {
        {"output_state", vector_to_json(r.output_state.amplitudes())},
        {"postselect_probability", r.postselect_probability},
        {"register_readout", r.register_readout},
        {"max_phase_error", r.max_phase_error},
        {"warnings", r.warnings},
    };
}

}  // namespace qhedr::qpce
