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

#include "riordan/serialize.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/palindromic.hpp"

namespace riordan {

namespace {

Json coeffs_to_json(const std::vector<Rational>& coeffs) {
  Json arr = Json::array();
  for (const Rational& c : coeffs) {
    arr.push_back(c.str());
  }
  return arr;
}

std::vector<Rational> coeffs_from_json(const Json& arr, const char* where) {
  if (!arr.is_array() || arr.empty()) {
    throw Error(std::string(where) + " must be a non-empty array of rational strings");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const Json& cell : arr) {
    if (!cell.is_string()) {
      throw Error(std::string(where) + " must contain only strings");
    }
    auto parsed = Rational::parse(cell.get<std::string>());
    if (!parsed) {
      throw Error(std::string(where) + ": '" + cell.get<std::string>() +
                  "' is not a rational number");
    }
    coeffs.push_back(*parsed);
  }
  return coeffs;
}

}  // namespace

Json series_to_json(const PowerSeries& s) {
  Json j;
  j["coeffs"] = coeffs_to_json(s.coeffs());
  j["order"] = s.order();
  return j;
}

PowerSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) {
    throw Error("a series document needs a 'coeffs' field");
  }
  std::vector<Rational> coeffs = coeffs_from_json(j.at("coeffs"), "'coeffs'");
  if (j.contains("order") && j.at("order").get<std::size_t>() != coeffs.size()) {
    throw Error("'order' disagrees with the length of 'coeffs'");
  }
  return PowerSeries(std::move(coeffs));
}

Json matrix_to_json(const RiordanMatrix& m) {
  const std::size_t rows = m.rows();
  Json j;
  j["kind"] = "riordan";
  j["f"] = coeffs_to_json(m.f().truncated(rows).coeffs());
  j["g"] = coeffs_to_json(m.g().truncated(rows).coeffs());
  j["order"] = rows;
  Json prefix = Json::array();
  for (const std::vector<Rational>& row : m.prefix()) {
    prefix.push_back(coeffs_to_json(row));
  }
  j["prefix"] = std::move(prefix);
  return j;
}

RiordanMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || j.value("kind", "") != "riordan") {
    throw Error("a matrix document needs kind 'riordan'");
  }
  if (!j.contains("f") || !j.contains("g")) {
    throw Error("a matrix document needs 'f' and 'g' coefficient arrays");
  }
  PowerSeries f(coeffs_from_json(j.at("f"), "'f'"));
  PowerSeries g(coeffs_from_json(j.at("g"), "'g'"));
  std::size_t rows = std::min(f.order(), g.order());
  if (j.contains("order")) {
    rows = j.at("order").get<std::size_t>();
  }
  RiordanMatrix m = RiordanMatrix::from_T(std::move(f), std::move(g), rows);
  if (j.contains("prefix")) {
    const Json& prefix = j.at("prefix");
    if (!prefix.is_array() || prefix.size() != m.rows()) {
      throw Error("'prefix' does not have one entry per row");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<Rational> row = coeffs_from_json(prefix.at(i), "'prefix' row");
      if (row != m.prefix()[i]) {
        throw Error("'prefix' row " + std::to_string(i) +
                    " disagrees with the matrix generated by f and g");
      }
    }
  }
  return m;
}

Json grid_to_json(const CoeffGrid& grid) {
  Json j;
  j["kind"] = "grid";
  j["rows"] = grid.rows;
  j["cols"] = grid.cols;
  Json data = Json::array();
  for (const std::vector<Rational>& row : grid.data) {
    data.push_back(coeffs_to_json(row));
  }
  j["data"] = std::move(data);
  return j;
}

Json palindrome_report_json(const RiordanMatrix& m) {
  PalindromeCheck check = is_palindromic(m);
  Json j;
  j["palindromic"] = check.palindromic;
  if (check.counterexample) {
    j["counterexample"] = Json::array({check.counterexample->first, check.counterexample->second});
  } else {
    j["counterexample"] = nullptr;
  }
  if (auto params = recover_params(m)) {
    Json p;
    p["f0"] = params->f0.str();
    p["g0"] = params->g0.str();
    p["f1"] = params->f1.str();
    p["g1"] = params->g1().str();
    j["params"] = std::move(p);
  } else {
    j["params"] = nullptr;
  }
  return j;
}

std::vector<std::vector<std::string>> matrix_strings(const RiordanMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(m.rows());
  for (const std::vector<Rational>& row : m.prefix()) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const Rational& value : row) {
      cells.push_back(value.str());
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<std::vector<std::string>> grid_strings(const CoeffGrid& grid) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(grid.rows);
  for (const std::vector<Rational>& row : grid.data) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const Rational& value : row) {
      cells.push_back(value.str());
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string table_to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::size_t width = 0;
  for (const std::vector<std::string>& row : rows) {
    width = std::max(width, row.size());
  }
  std::string out;
  for (const std::vector<std::string>& row : rows) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j > 0) {
        out += ',';
      }
      if (j < row.size()) {
        out += row[j];
      }
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_csv(const RiordanMatrix& m) {
  return table_to_csv(matrix_strings(m));
}

std::string grid_to_csv(const CoeffGrid& grid) {
  return table_to_csv(grid_strings(grid));
}

std::string series_to_csv(const PowerSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.order(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += s.coeff(i).str();
  }
  out += '\n';
  return out;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const std::vector<std::string>& row : rows) {
    if (row.size() > widths.size()) {
      widths.resize(row.size(), 0);
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      widths[j] = std::max(widths[j], row[j].size());
    }
  }
  std::string out;
  for (const std::vector<std::string>& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) {
        out += "  ";
      }
      out.append(widths[j] - row[j].size(), ' ');
      out += row[j];
    }
    out += '\n';
  }
  return out;
}

std::string render_series(const PowerSeries& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.order(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += s.coeff(i).str();
  }
  out += "]";
  return out;
}

}  // namespace riordan
