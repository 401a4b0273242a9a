// Copyright 2026 The riordan-toolkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "riordan/diagonals.hpp"
#include "riordan/power_series.hpp"
#include "riordan/riordan_matrix.hpp"

namespace riordan {

using Json = nlohmann::ordered_json;

// Series travel as arrays of exact rational strings, never as floats:
//   {"coeffs": ["1", "-35/2", "15/2"], "order": 3}
Json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j);

// Matrices carry their defining pair truncated to the stored prefix:
//   {"kind": "riordan", "f": [...], "g": [...], "order": N, "prefix": [[...], ...]}
// Reading rebuilds the prefix from f and g; if the document also carries a
// prefix it must match, otherwise Error.
Json matrix_to_json(const RiordanMatrix& m);
RiordanMatrix matrix_from_json(const Json& j);

Json grid_to_json(const CoeffGrid& grid);

// {"palindromic": bool, "counterexample": [n, k] | null, "params": {...} | null}
Json palindrome_report_json(const RiordanMatrix& m);

// Cell tables: matrices are ragged lower-triangular, grids rectangular.
std::vector<std::vector<std::string>> matrix_strings(const RiordanMatrix& m);
std::vector<std::vector<std::string>> grid_strings(const CoeffGrid& grid);

// CSV with one line per row; matrix rows are padded with blank cells to the
// full square width.
std::string matrix_to_csv(const RiordanMatrix& m);
std::string grid_to_csv(const CoeffGrid& grid);
std::string series_to_csv(const PowerSeries& s);
std::string table_to_csv(const std::vector<std::vector<std::string>>& rows);

// Human-readable aligned table: right-justified cells, two-space gutter.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

// One line: "[c0, c1, ...]".
std::string render_series(const PowerSeries& s);

}  // namespace riordan
