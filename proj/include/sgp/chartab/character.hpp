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

#ifndef SGP_CHARTAB_CHARACTER_HPP
#define SGP_CHARTAB_CHARACTER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgp/exact/cyclo.hpp"
#include "sgp/groups/classes.hpp"
#include "sgp/groups/fingroup.hpp"

namespace sgp::chartab {

/// A finite group together with its conjugacy classes. Immutable.
class ClassSpace {
 public:
  ClassSpace(groups::GroupPtr group, groups::ClassData classes);
  const groups::FinGroup& group() const { return *group_; }
  const groups::GroupPtr& group_ptr() const { return group_; }
  const groups::ClassData& classes() const { return classes_; }
  const std::string& label() const { return group_->label(); }
  std::size_t class_count() const { return classes_.count(); }
  std::uint64_t order() const { return group_->order(); }
  std::uint64_t class_size(std::size_t i) const { return classes_.sizes[i]; }
  std::uint64_t centralizer_order(std::size_t i) const { return order() / classes_.sizes[i]; }
  /// lcm of the element orders.
  std::uint64_t exponent() const { return exponent_; }
  groups::Code rep(std::size_t i) const { return group_->element(classes_.reps[i]); }
  /// Class containing the element; throws DomainError for non-members.
  std::uint32_t class_of(groups::Code c) const;
  /// Class of rep(i)^k.
  std::uint32_t power_class(std::size_t i, std::uint64_t k) const;

 private:
  groups::GroupPtr group_;
  groups::ClassData classes_;
  std::uint64_t exponent_ = 1;
};
using SpacePtr = std::shared_ptr<const ClassSpace>;

SpacePtr make_space(groups::GroupPtr group, const groups::Limits& limits = {});

/// Class function, one value per class of its space.
struct Character {
  SpacePtr space;
  std::vector<exact::Cyclo> values;
  std::string label;
  exact::Rat degree() const;
};

bool operator==(const Character& a, const Character& b);
Character operator+(const Character& a, const Character& b);

struct CharTable {
  SpacePtr space;
  std::vector<Character> irreducibles;
  std::size_t size() const { return irreducibles.size(); }
  const Character& operator[](std::size_t i) const { return irreducibles[i]; }
  std::vector<exact::Rat> degrees() const;
};

/// (1/|G|) sum |C_i| a_i conj(b_i).
exact::Rat inner_product(const Character& a, const Character& b);
/// H-class -> containing G-class.
std::vector<std::uint32_t> fusion_map(const ClassSpace& h, const ClassSpace& g);
Character induce(const Character& psi, const SpacePtr& g);
Character restrict(const Character& chi, const SpacePtr& h);
Character total_character(const CharTable& t);
Character trivial_character(const SpacePtr& space);
Character regular_character(const SpacePtr& space);
/// <chi, irr_i> for every irreducible of t.
std::vector<exact::Rat> decompose(const Character& chi, const CharTable& t);

enum class SplitFuse { split, fuse };
std::string to_string(SplitFuse s);
/// Index-2 behaviour of an irreducible psi of H = psi.space under induction to g.
SplitFuse split_fuse(const Character& psi, const SpacePtr& g);

/// First violated table invariant (row count, degrees, conjugation, row and
/// column orthogonality, sum of squared degrees), or nullopt.
std::optional<std::string> table_defect(const CharTable& t);

}  // namespace sgp::chartab

#endif  // SGP_CHARTAB_CHARACTER_HPP
