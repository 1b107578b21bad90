// Copyright 2026 The simplicial-lines Authors
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

#ifndef SIMPLICIAL_LINES_TOOLS_COMMANDS_HPP_
#define SIMPLICIAL_LINES_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace simplicial_lines::cli {

// Process exit codes of the simplicial-lines tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailure = 1,
  kExitInputError = 2,
  kExitCheckFailed = 3,
  kExitNotShellable = 4,
  kExitInconclusive = 5,
  kExitBoundExceeded = 6,
};

// Runs `simplicial-lines <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace simplicial_lines::cli

#endif  // SIMPLICIAL_LINES_TOOLS_COMMANDS_HPP_
