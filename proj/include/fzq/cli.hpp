// Copyright 2026 The fzq Authors
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

#ifndef FZQ_CLI_HPP
#define FZQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fzq::cli {

enum ExitCode : int {
    kOk = 0,
    kDiagnostics = 1,
    kCounterexample = 2,
    kCapExceeded = 3,
    kUnsat = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fzq::cli

#endif  // FZQ_CLI_HPP
