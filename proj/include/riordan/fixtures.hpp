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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace riordan {

// A golden table: the exact cell strings of a reference display, plus the
// location of the block that the library can regenerate. Plain triangles are
// regenerable in full (quadrant at the origin). The bi-infinite windows are
// shipped read-only: only their lower-right quadrant comes from a Riordan
// matrix, so only that block is re-derived; the remaining cells are data.
struct Fixture {
  std::string name;
  // Which library call reproduces the regenerable block.
  std::string generator;
  std::vector<std::vector<std::string>> window;
  std::size_t quadrant_row = 0;
  std::size_t quadrant_col = 0;
  // Printed above the diagonal inside the quadrant, where the window shows
  // explicit zeros rather than blanks.
  std::string filler = "0";
};

const std::vector<Fixture>& all_fixtures();
const Fixture* find_fixture(std::string_view name);

// Rebuilds the regenerable block of the window from the library call named
// by the fixture. The result has the same (possibly ragged) shape as the
// window from (quadrant_row, quadrant_col) onward.
std::vector<std::vector<std::string>> regenerate_quadrant(const Fixture& f);

struct FixtureMismatch {
  std::string fixture;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string expected;
  std::string actual;
};

// Regenerates every fixture and diffs cell by cell; empty means clean.
std::vector<FixtureMismatch> verify_fixtures();

}  // namespace riordan
