/*
   Copyright 2026 the maxsubfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXSUBFIELD_CLI_HPP
#define MAXSUBFIELD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace msf::cli {

/// Exit codes: 0 success, 2 usage or input syntax, 3 search exhaustion,
/// 4 mathematical precondition violation, 1 internal failure.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kExhausted = 3;
inline constexpr int kPreconditionError = 4;

/// Runs one CLI invocation (args exclude the program name). All regular
/// output goes to `out`, diagnostics to `err`; with --json exactly one JSON
/// document is written to `out`. Used by the maxsubfield binary and called
/// directly in tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msf::cli

#endif
