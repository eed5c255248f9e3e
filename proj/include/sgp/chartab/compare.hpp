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

#ifndef SGP_CHARTAB_COMPARE_HPP
#define SGP_CHARTAB_COMPARE_HPP

#include <optional>
#include <vector>

#include "sgp/chartab/character.hpp"

namespace sgp::chartab {

/// Row r of a equals row rows[r] of b after sending column c to cols[c].
struct TableMatch {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Simultaneous row and column permutation carrying a onto b with exact
/// value equality and equal class sizes, if any.
std::optional<TableMatch> match_tables(const CharTable& a, const CharTable& b);
bool tables_equivalent(const CharTable& a, const CharTable& b);

}  // namespace sgp::chartab

#endif  // SGP_CHARTAB_COMPARE_HPP
