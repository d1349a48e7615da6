// Copyright 2026 The htable Authors
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

#ifndef HTABLE_TOOLS_CLI_CLI_H_
#define HTABLE_TOOLS_CLI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace htable::cli {

// Exit-code registry.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,      // unreadable or malformed input
  kTransform = 3,  // an op in a script failed
  kValidation = 4, // locator, recommendation or visualization error
};

// Runs the command line `args` (args[0] is the program name). "-" as a path
// reads `in` or writes `out`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace htable::cli

#endif  // HTABLE_TOOLS_CLI_CLI_H_
