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

// Shortcut binary: `delannoy ...` behaves exactly like `riordan delannoy ...`.

#include <iostream>
#include <string>
#include <vector>

#include "riordan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args{"delannoy"};
  args.reserve(static_cast<std::size_t>(argc) + 1);
  for (int i = 1; i < argc; ++i) {
    args.emplace_back(argv[i]);
  }
  return riordan::run_cli(std::move(args), std::cout, std::cerr);
}
