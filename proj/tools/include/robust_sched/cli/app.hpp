// Copyright 2026 The robust_sched Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace robust_sched::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // I/O, invalid input, oracle limits
  kUsage = 2,          // bad command line
  kCheckFailed = 3,    // `check` ran and at least one property failed
};

/// Entry point of the `robust_sched` tool. `args[0]` is the program name.
/// Regular output goes to `out`; diagnostics go to `err` as one JSON object
/// per line: {"error": <kind>, "message": <text>}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace robust_sched::cli
