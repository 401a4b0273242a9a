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

#include <iosfwd>
#include <string>
#include <vector>

namespace riordan {

// Command line front end. `args` is the argument list without the program
// name; results go to `out`, diagnostics to `err`. Returns the process exit
// code: 0 on success, 1 on domain errors (inadmissible input values, budget
// overruns, failed verifications), 2 on usage errors (unknown flags, missing
// arguments, malformed expressions). Every domain error message names the
// flag that carried the offending input.
//
// The default truncation is 16 rows/coefficients; the environment variable
// RIORDAN_DEFAULT_ORDER (a positive integer, read once per invocation)
// overrides it. Individual --rows/--order/--len flags override both.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace riordan
