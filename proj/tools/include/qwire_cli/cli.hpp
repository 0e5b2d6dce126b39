/* Copyright 2026 The qwire Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QWIRE_CLI_CLI_HPP
#define QWIRE_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qwire::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitValidation = 2;

/// Environment variable that relocates relative `--output` paths.
inline constexpr const char* kOutputDirEnv = "QWIRE_OUTPUT_DIR";

/// Shortest decimal text that parses back to exactly `x`; locale independent.
std::string format_double(double x);

/// Inverse of format_double. Throws std::invalid_argument on malformed text.
double parse_double(std::string_view text);

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out` (or to the `--output` file), diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qwire::cli

#endif // QWIRE_CLI_CLI_HPP
