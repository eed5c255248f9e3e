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

#ifndef SGP_GROUPS_GROUP_SPEC_HPP
#define SGP_GROUPS_GROUP_SPEC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgp/error.hpp"

namespace sgp::groups {

/// Syntax or validity error in a group-spec or command line, carrying the
/// 1-based column of the offending token.
class SpecError : public DomainError {
 public:
  SpecError(std::size_t column, const std::string& what);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parsed `name[:arg[:arg]]`.
struct GroupSpec {
  std::string name;
  std::vector<std::uint64_t> args;
  std::string text;
  std::size_t column = 1;

  std::uint64_t q() const { return args.empty() ? 0 : args[0]; }
};

/// Names accepted by parse_group_spec.
const std::vector<std::string>& group_spec_names();

/// Parses and validates a group-spec; column is the position of text[0] in
/// the enclosing command line.
GroupSpec parse_group_spec(std::string_view text, std::size_t column = 1);

/// Order of the named construction evaluated from its closed formula,
/// saturated at UINT64_MAX.
std::uint64_t predicted_order(const GroupSpec& spec);

/// Order of the group that has to be enumerated to build spec (the parent
/// sp4:q for stabilizer constructions).
std::uint64_t enumeration_order(const GroupSpec& spec);

}  // namespace sgp::groups

#endif  // SGP_GROUPS_GROUP_SPEC_HPP
