// Copyright 2026 The seqmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "seqmeas/sequential.hpp"

namespace seqmeas {

/// Field order follows insertion, so equal objects serialize to identical
/// bytes. Doubles are written in shortest round-trip form.
using Json = nlohmann::ordered_json;

// Matrix: {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

// Group: {"moduli": [2, 3]}
Json to_json(const Group& g);
Group group_from_json(const Json& j);

// A state is a bare matrix.
State state_from_json(const Json& j);

// Povm: {"outcomes": [[0], [1]], "effects": [matrix, ...]}
Json to_json(const Povm& p);
Povm povm_from_json(const Json& j);

// ProbVector: {"outcomes": [...], "weights": [...]}
Json to_json(const ProbVector& p);

// Instrument: {"group": group, "maps": [{"dim_in": n, "dim_out": n, "choi": matrix}, ...]}.
// dim_in and dim_out may be omitted for square maps.
Json to_json(const Instrument& i);
Instrument instrument_from_json(const Json& j);

// CovariantMeasure: {"group": group, "m": [matrix, ...]}
Json to_json(const CovariantMeasure& mm);
CovariantMeasure measure_from_json(const Json& j);

Json to_json(const SequentialResiduals& r);
Json to_json(const SequentialResult& r);

/// Throws IoError when the file cannot be read, ParseError when it is not JSON.
Json read_json_file(const std::filesystem::path& path);

/// Writes `text` to `path`; throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Canonical text form: two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// "outcome,probability" header and one row per outcome; residues of an
/// outcome are separated by spaces.
std::string distribution_csv(const ProbVector& p);

}  // namespace seqmeas
