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

#ifndef SGP_CHARTAB_DIXON_HPP
#define SGP_CHARTAB_DIXON_HPP

#include <cstdint>

#include "sgp/chartab/character.hpp"

namespace sgp::chartab {

struct DixonStats {
  std::uint64_t prime = 0;
  std::size_t class_matrices = 0;
};

/// Irreducible characters from the class-multiplication matrices, split
/// over F_p with p = 1 mod exponent, lifted to exact cyclotomic values.
/// Rows sorted by (degree, value keys). Throws ResourceError past 200
/// classes or the deadline.
CharTable dixon_schneider(const SpacePtr& space, const groups::Limits& limits = {}, DixonStats* stats = nullptr);

}  // namespace sgp::chartab

#endif  // SGP_CHARTAB_DIXON_HPP
