// Copyright 2026 The Authors.
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

#ifndef BCD_TOOLS_CLI_HPP_
#define BCD_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace bcd::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;            // I/O failure or --verify mismatch
inline constexpr int kExitPrecondition = 2;  // bad input, precondition, size

// Runs `bcd <args...>` (args exclude the program name). Data goes to `out`
// unless --out names a file; diagnostics go to `err` as one line.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bcd::cli

#endif  // BCD_TOOLS_CLI_HPP_
