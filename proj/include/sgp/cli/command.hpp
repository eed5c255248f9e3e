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

#ifndef SGP_CLI_COMMAND_HPP
#define SGP_CLI_COMMAND_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgp/groups/group_spec.hpp"

namespace sgp::cli {

enum class Verb { chartab, sgp, scan_maximal, alpha_sum, families, verify_paper, show_field };
enum class Format { pretty, json, csv };

const std::vector<std::string>& verb_names();
const std::vector<std::string>& family_names();
std::string to_string(Verb v);

struct Options {
  Format format = Format::pretty;
  std::uint64_t max_order = 2'500'000;
  bool deep = false;
  bool full = false;
  bool show_field = false;
  std::uint64_t seed = 0;  // reserved
  std::optional<double> time_budget_seconds;
};

struct Command {
  Verb verb = Verb::chartab;
  std::vector<groups::GroupSpec> groups;
  std::vector<std::int64_t> integers;
  std::string family;
  Options options;
  std::string text;
};

/// Parses `verb arg*`. Errors are groups::SpecError carrying the column of
/// the offending word in the space-joined command line. Group orders are
/// checked against options.max_order here, before anything is enumerated
/// (ResourceError).
Command parse_command(const std::vector<std::string>& words, const Options& options = {});
Command parse_command(std::string_view line, const Options& options = {});

}  // namespace sgp::cli

#endif  // SGP_CLI_COMMAND_HPP
