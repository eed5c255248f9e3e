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

#ifndef SGP_GROUPS_FINGROUP_HPP
#define SGP_GROUPS_FINGROUP_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "sgp/groups/model.hpp"

namespace sgp::groups {

/// Resource bounds shared by every enumeration-heavy operation.
struct Limits {
  std::uint64_t max_order = 2'500'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// Throws ResourceError once the deadline has passed.
  void check_time(const char* what) const;
  void check_order(std::uint64_t order, const std::string& what) const;
};

/// Explicit finite group: generators plus the full element list in
/// breadth-first order from the identity (element 0).
class FinGroup {
 public:
  /// Enumerates the closure of gens; throws ResourceError past limits.max_order.
  static FinGroup generate(ModelPtr model, std::vector<Code> gens, std::string label, const Limits& limits = {});

  const Model& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  const std::string& label() const { return label_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Code>& generators() const { return generators_; }
  std::span<const Code> elements() const { return elements_; }
  Code element(std::uint32_t i) const { return elements_[i]; }
  Code identity() const { return elements_[0]; }

  std::optional<std::uint32_t> index_of(Code c) const;
  bool contains(Code c) const { return index_.count(c) != 0; }
  /// index_of that throws DomainError for non-members.
  std::uint32_t require_index(Code c) const;

  Code multiply(Code a, Code b) const { return model_->multiply(a, b); }
  Code inverse(Code a) const { return model_->inverse(a); }

  FinGroup relabeled(std::string label) const;
  nlohmann::json to_json() const;

 private:
  FinGroup() = default;
  ModelPtr model_;
  std::string label_;
  std::vector<Code> generators_;
  std::vector<Code> elements_;
  std::unordered_map<Code, std::uint32_t> index_;
};

using GroupPtr = std::shared_ptr<const FinGroup>;

/// True when every generator of h lies in g and both share a model.
bool is_subgroup(const FinGroup& h, const FinGroup& g);
/// Throws DomainError unless is_subgroup(h, g).
void require_subgroup(const FinGroup& h, const FinGroup& g);

/// Subgroup of g generated by gens (codes of g's model).
GroupPtr subgroup_generated(const FinGroup& g, std::vector<Code> gens, std::string label);
/// Subgroup {x in g : keep(x)}; keep must define a subgroup. A generating set
/// is picked greedily in element order.
GroupPtr subgroup_by_filter(const FinGroup& g, const std::function<bool(Code)>& keep, std::string label);
/// Every subgroup of g (joins of cyclic subgroups), sorted by order then elements.
std::vector<GroupPtr> all_subgroups(const FinGroup& g);

}  // namespace sgp::groups

#endif  // SGP_GROUPS_FINGROUP_HPP
