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

#ifndef SGP_GROUPS_CLASSES_HPP
#define SGP_GROUPS_CLASSES_HPP

#include <cstdint>
#include <vector>

#include "sgp/groups/fingroup.hpp"

namespace sgp::groups {

/// Partition of a group's elements into orbits under conjugation (by the
/// whole group, or by a subgroup for H-classes). Indices refer to the
/// enumeration order of the owning FinGroup.
struct ClassData {
  std::vector<std::uint32_t> reps;           // element index of each representative
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;       // element index -> class
  std::vector<std::uint32_t> inverse_class;  // class of rep^-1
  std::vector<std::uint64_t> rep_orders;     // element order of each representative

  std::size_t count() const { return reps.size(); }
  /// Element indices grouped by class, in enumeration order.
  std::vector<std::vector<std::uint32_t>> members() const;
};

/// Conjugacy classes; representative = first element of its class in
/// enumeration order, classes numbered by representative. Class 0 is {1}.
ClassData conjugacy_classes(const FinGroup& g, const Limits& limits = {});

/// Orbits of g under conjugation by h (h <= g), same conventions.
ClassData h_classes(const FinGroup& g, const FinGroup& h, const Limits& limits = {});

/// |{x in g : xc = cx}|.
std::uint64_t centralizer_order(const FinGroup& g, Code c);

}  // namespace sgp::groups

#endif  // SGP_GROUPS_CLASSES_HPP
