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

#include "riordan/fixtures.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "riordan/ab_poly.hpp"
#include "riordan/delannoy.hpp"
#include "riordan/errors.hpp"
#include "riordan/riordan_matrix.hpp"
#include "riordan/series_expr.hpp"

namespace riordan {

namespace {

using Table = std::vector<std::vector<std::string>>;

PowerSeries eval(const char* text, std::size_t order) {
  return evaluate(*parse_series_expr(text), order);
}

RiordanMatrix from_exprs(const char* f, const char* g, std::size_t rows) {
  return RiordanMatrix::from_T(eval(f, rows), eval(g, rows), rows);
}

// Walks the window region from the quadrant corner, reading entries from the
// matrix and the filler string above the diagonal.
Table quadrant_from_matrix(const Fixture& fx, const RiordanMatrix& m) {
  Table out;
  for (std::size_t i = fx.quadrant_row; i < fx.window.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = fx.quadrant_col; j < fx.window[i].size(); ++j) {
      const std::size_t r = i - fx.quadrant_row;
      const std::size_t c = j - fx.quadrant_col;
      row.push_back(c <= r ? m.entry(r, c).str() : fx.filler);
    }
    out.push_back(std::move(row));
  }
  return out;
}

Table quadrant_symbolic(const Fixture& fx) {
  std::vector<std::vector<AbPoly>> tri = delannoy_q_symbolic(fx.window.size());
  Table out;
  for (std::size_t i = 0; i < fx.window.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < fx.window[i].size(); ++j) {
      row.push_back(j <= i ? tri[i][j].str() : fx.filler);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;

  out.push_back(Fixture{
      "pascal",
      "T(1 | 1-x), first 6 rows",
      {{"1"},
       {"1", "1"},
       {"1", "2", "1"},
       {"1", "3", "3", "1"},
       {"1", "4", "6", "4", "1"},
       {"1", "5", "10", "10", "5", "1"}},
      0,
      0,
      "0"});

  out.push_back(Fixture{
      "catalan",
      "T(1 | (1+sqrt(1-4*x))/2), first 5 rows",
      {{"1"},
       {"1", "1"},
       {"2", "2", "1"},
       {"5", "5", "3", "1"},
       {"14", "14", "9", "4", "1"}},
      0,
      0,
      "0"});

  out.push_back(Fixture{
      "motivating-D",
      "T(1/(1-x)^2 | 2*x-1), first 6 rows",
      {{"-1"},
       {"-4", "1"},
       {"-11", "6", "-1"},
       {"-26", "23", "-8", "1"},
       {"-57", "72", "-39", "10", "-1"},
       {"-120", "201", "-150", "59", "-12", "1"}},
      0,
      0,
      "0"});

  out.push_back(Fixture{
      "motivating-D-tilde",
      "T((2*x-1)/(1-x)^2 | 2*x-1), first 7 rows",
      {{"1"},
       {"2", "-1"},
       {"3", "-4", "1"},
       {"4", "-11", "6", "-1"},
       {"5", "-26", "23", "-8", "1"},
       {"6", "-57", "72", "-39", "10", "-1"},
       {"7", "-120", "201", "-150", "59", "-12", "1"}},
      0,
      0,
      "0"});

  out.push_back(Fixture{
      "delannoy",
      "T(1/(1+x) | (1-x)/(1+x)), first 7 rows",
      {{"1"},
       {"1", "1"},
       {"1", "3", "1"},
       {"1", "5", "5", "1"},
       {"1", "7", "13", "7", "1"},
       {"1", "9", "25", "25", "9", "1"},
       {"1", "11", "41", "63", "41", "11", "1"}},
      0,
      0,
      "0"});

  out.push_back(Fixture{
      "qab-symbolic",
      "weight triangle with symbolic entries, first 6 rows",
      {{"1", "0", "0", "0", "0", "0"},
       {"a", "a", "0", "0", "0", "0"},
       {"a^2", "a^2 + b", "a^2", "0", "0", "0"},
       {"a^3", "a^3 + 2*a*b", "a^3 + 2*a*b", "a^3", "0", "0"},
       {"a^4", "a^4 + 3*a^2*b", "a^4 + 4*a^2*b + b^2", "a^4 + 3*a^2*b", "a^4", "0"},
       {"a^5", "a^5 + 4*a^3*b", "a^5 + 6*a^3*b + 3*a*b^2", "a^5 + 6*a^3*b + 3*a*b^2",
        "a^5 + 4*a^3*b", "a^5"}},
      0,
      0,
      "0"});

  out.push_back(Fixture{
      "biinfinite-pascal",
      "window of the doubly indexed binomial table; lower right block is T(1 | 1-x)",
      {{"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
       {"-5", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
       {"10", "-4", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
       {"-10", "6", "-3", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
       {"5", "-4", "3", "-2", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
       {"-1", "1", "-1", "1", "-1", "1", "0", "0", "0", "0", "0", "0", "0"},
       {"0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"},
       {"0", "0", "0", "0", "0", "0", "1", "1", "0", "0", "0", "0", "0"},
       {"0", "0", "0", "0", "0", "0", "1", "2", "1", "0", "0", "0", "0"},
       {"0", "0", "0", "0", "0", "0", "1", "3", "3", "1", "0", "0", "0"},
       {"0", "0", "0", "0", "0", "0", "1", "4", "6", "4", "1", "0", "0"},
       {"0", "0", "0", "0", "0", "0", "1", "5", "10", "10", "5", "1", "0"}},
      6,
      6,
      "0"});

  out.push_back(Fixture{
      "banpas",
      "window with antisymmetric diagonals; lower right block is T((2*x-1)/(1-x)^2 | 2*x-1)",
      {{"-1", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
       {"8", "1", "0", "0", "0", "0", "0", "0", "0", "0"},
       {"-23", "-6", "-1", "0", "0", "0", "0", "0", "0", "0"},
       {"26", "11", "4", "1", "0", "0", "0", "0", "0", "0"},
       {"-5", "-4", "-3", "-2", "-1", "0", "0", "0", "0", "0"},
       {"-4", "-3", "-2", "-1", "0", "1", "0", "0", "0", "0"},
       {"-3", "-2", "-1", "0", "1", "2", "-1", "0", "0", "0"},
       {"-2", "-1", "0", "1", "2", "3", "-4", "1", "0", "0"},
       {"-1", "0", "1", "2", "3", "4", "-11", "6", "-1", "0"},
       {"0", "1", "2", "3", "4", "5", "-26", "23", "-8", "1"}},
      5,
      5,
      "0"});

  out.push_back(Fixture{
      "biinfinite-catalan",
      "window around the Catalan-style array; lower right block is "
      "T(g | g) with g = (1+sqrt(1-4*x))/2",
      {{"1"},
       {"-5", "1"},
       {"5", "-4", "1"},
       {"0", "2", "-3", "1"},
       {"0", "0", "0", "-2", "1"},
       {"-1", "-1", "-1", "-1", "-1", "1"},
       {"-5", "-4", "-3", "-2", "-1", "0", "1"},
       {"-20", "-14", "-9", "-5", "-2", "0", "1", "1"},
       {"-75", "-48", "-28", "-14", "-5", "0", "2", "2", "1"},
       {"-275", "-165", "-90", "-42", "-14", "0", "5", "5", "3", "1"}},
      5,
      5,
      "0"});

  out.push_back(Fixture{
      "example38",
      "self-inverse window; lower right block is T(sqrt(1-2*x) | 2*x-1)",
      {{"-1"},
       {"7", "1"},
       {"-35/2", "-5", "-1"},
       {"35/2", "15/2", "3", "1"},
       {"-35/8", "-5/2", "-3/2", "-1", "-1"},
       {"-7/8", "-5/8", "-1/2", "-1/2", "-1", "1"},
       {"-7/16", "-3/8", "-3/8", "-1/2", "-3/2", "3", "-1"},
       {"-5/16", "-5/16", "-3/8", "-5/8", "-5/2", "15/2", "-5", "1"},
       {"-35/128", "-5/16", "-7/16", "-7/8", "-35/8", "35/2", "-35/2", "7", "-1"}},
      4,
      4,
      "0"});

  return out;
}

}  // namespace

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = build_fixtures();
  return fixtures;
}

const Fixture* find_fixture(std::string_view name) {
  for (const Fixture& f : all_fixtures()) {
    if (f.name == name) {
      return &f;
    }
  }
  return nullptr;
}

std::vector<std::vector<std::string>> regenerate_quadrant(const Fixture& f) {
  const std::size_t depth = f.window.size() - f.quadrant_row;
  if (f.name == "pascal" || f.name == "biinfinite-pascal") {
    return quadrant_from_matrix(f, from_exprs("1", "1-x", depth));
  }
  if (f.name == "catalan") {
    return quadrant_from_matrix(f, from_exprs("1", "(1+sqrt(1-4*x))/2", depth));
  }
  if (f.name == "motivating-D") {
    return quadrant_from_matrix(f, from_exprs("1/(1-x)^2", "2*x-1", depth));
  }
  if (f.name == "motivating-D-tilde" || f.name == "banpas") {
    return quadrant_from_matrix(f, from_exprs("(2*x-1)/(1-x)^2", "2*x-1", depth));
  }
  if (f.name == "delannoy") {
    return quadrant_from_matrix(f, from_exprs("1/(1+x)", "(1-x)/(1+x)", depth));
  }
  if (f.name == "qab-symbolic") {
    return quadrant_symbolic(f);
  }
  if (f.name == "biinfinite-catalan") {
    return quadrant_from_matrix(
        f, from_exprs("(1+sqrt(1-4*x))/2", "(1+sqrt(1-4*x))/2", depth));
  }
  if (f.name == "example38") {
    return quadrant_from_matrix(f, from_exprs("sqrt(1-2*x)", "2*x-1", depth));
  }
  throw Error("no generator registered for fixture '" + f.name + "'");
}

std::vector<FixtureMismatch> verify_fixtures() {
  std::vector<FixtureMismatch> diffs;
  for (const Fixture& f : all_fixtures()) {
    const std::vector<std::vector<std::string>> regenerated = regenerate_quadrant(f);
    for (std::size_t i = 0; i < regenerated.size(); ++i) {
      for (std::size_t j = 0; j < regenerated[i].size(); ++j) {
        const std::string& expected = f.window[f.quadrant_row + i][f.quadrant_col + j];
        if (regenerated[i][j] != expected) {
          diffs.push_back(FixtureMismatch{f.name, f.quadrant_row + i, f.quadrant_col + j,
                                          expected, regenerated[i][j]});
        }
      }
    }
  }
  return diffs;
}

}  // namespace riordan
