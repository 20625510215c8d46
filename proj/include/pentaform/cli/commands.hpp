// Copyright 2026 The Pentaform Authors
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

#ifndef PENTAFORM_CLI_COMMANDS_HPP_
#define PENTAFORM_CLI_COMMANDS_HPP_

#include <string>
#include <vector>

namespace pentaform::cli {

// Exit statuses shared by every command.
enum Status : int {
  kHolds = 0,
  kFails = 1,
  kInputError = 2,
  kResourceCap = 3,
  kInconclusive = 4,
};

// What one invocation printed and how it ended. The output is a pure
// function of the arguments and the files they name.
struct Report {
  std::string output;
  std::string errors;
  int status = kHolds;
};

// args excludes the program name.
Report run(const std::vector<std::string>& args);

}  // namespace pentaform::cli

#endif  // PENTAFORM_CLI_COMMANDS_HPP_
