/*
 * Copyright 2026 The sgp-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SGP_CLI_RUN_HPP
#define SGP_CLI_RUN_HPP

#include <ostream>

#include "sgp/cli/command.hpp"

namespace sgp::cli {

/// Exit statuses.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kResource = 3,
  kCrossCheck = 4,
};

/// Runs a parsed command, streaming the report to out and diagnostics to err.
int run(const Command& cmd, std::ostream& out, std::ostream& err);
/// parse_command + run with the same exit-code mapping for parse errors.
int run_words(const std::vector<std::string>& words, const Options& options, std::ostream& out, std::ostream& err);

}  // namespace sgp::cli

#endif  // SGP_CLI_RUN_HPP
