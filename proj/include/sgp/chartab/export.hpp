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

#ifndef SGP_CHARTAB_EXPORT_HPP
#define SGP_CHARTAB_EXPORT_HPP

#include <string>

#include "json.hpp"
#include "sgp/chartab/character.hpp"

namespace sgp::chartab {

/// {group, order, classes: [{rep, size, element_order}], irreducibles: [{label, values}]}
/// with values in E(N) notation. Exact.
nlohmann::json table_to_json(const CharTable& t);
nlohmann::json character_to_json(const Character& c);
/// Floating-point embedding of every value; marked lossy in the first line.
std::string table_to_csv(const CharTable& t);
/// Aligned text table.
std::string table_to_pretty(const CharTable& t);

}  // namespace sgp::chartab

#endif  // SGP_CHARTAB_EXPORT_HPP
