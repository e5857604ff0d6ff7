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

#include <filesystem>
#include <istream>

#include "json.hpp"
#include "qhedr/qpce/dataset.hpp"
#include "qhedr/qpce/qpce.hpp"

namespace qhedr::qpce {

/// Each row holds 2*dim numbers: re, im, re, im, ... Blank lines and lines
/// starting with '#' are skipped. Returns the raw operator; callers decide
/// whether it must have unit trace.
CMatrix read_operator_csv(std::istream& in);
CMatrix load_operator_csv(const std::filesystem::path& path);
void write_operator_csv(std::ostream& out, const CMatrix& m);

/// One vector per row.
Dataset read_dataset_csv(std::istream& in);
Dataset load_dataset_csv(const std::filesystem::path& path);

nlohmann::json vector_to_json(const CVector& v);  // [[re, im], ...]
nlohmann::json qpce_result_to_json(const QpceResult& r);

}  // namespace qhedr::qpce
