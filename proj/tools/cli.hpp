// Copyright 2026 The coarsequant Authors
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

#ifndef COARSEQUANT_TOOLS_CLI_HPP_
#define COARSEQUANT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "coarsequant/error.hpp"

namespace coarsequant::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // compare: realized DOS exceeded the bound
  kExitUsage = 2,
  kExitIo = 3,
  kExitConstraint = 4,
};

int exit_code_for(ErrorCode code) noexcept;

// Runs one command line (args[0] is the program name). Normal output goes to
// out, diagnostics and warnings to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace coarsequant::cli

#endif  // COARSEQUANT_TOOLS_CLI_HPP_
