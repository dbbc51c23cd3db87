// Copyright (c) 2026 The spvkit Authors
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

#ifndef SPVKIT_CLI_H_
#define SPVKIT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace spvkit {

// Exit codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;

// Runs the command-line tool. args[0] is the program name. stdin_is_input
// backs the "-" input; out_is_terminal decides --color=auto and whether
// binary output to out needs --force. SPIRV_GRAMMAR_DIR, when set, names a
// directory holding the grammar files to use instead of the built-in one.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err, bool out_is_terminal);

}  // namespace spvkit

#endif  // SPVKIT_CLI_H_
