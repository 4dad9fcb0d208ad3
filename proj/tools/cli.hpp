// Copyright 2026 The softeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOFTEQ_TOOLS_CLI_HPP
#define SOFTEQ_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace softeq::cli {

enum ExitCode : int {
  ok = 0,
  failed = 1,        // infeasible instance or propagation failure
  usage = 2,         // bad arguments, unreadable file, parse error
  precondition = 3,  // instance outside the method's class, cap or budget hit
  internal = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace softeq::cli

#endif  // SOFTEQ_TOOLS_CLI_HPP
