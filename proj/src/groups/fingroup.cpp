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

#include "sgp/groups/fingroup.hpp"

#include <algorithm>
#include <set>

#include "sgp/error.hpp"

namespace sgp::groups {

void Limits::check_time(const char* what) const {
  if (deadline && std::chrono::steady_clock::now() > *deadline)
    throw ResourceError(std::string("time budget exhausted during ") + what);
}

void Limits::check_order(std::uint64_t order, const std::string& what) const {
  if (order > max_order)
    throw ResourceError(what + ": order " + std::to_string(order) + " exceeds the enumeration bound " +
                        std::to_string(max_order));
}

FinGroup FinGroup::generate(ModelPtr model, std::vector<Code> gens, std::string label, const Limits& limits) {
  FinGroup g;
  g.model_ = std::move(model);
  g.label_ = std::move(label);
  g.generators_ = std::move(gens);
  const Code id = g.model_->identity();
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    if ((head & 0xFFFF) == 0) limits.check_time("group enumeration");
    const Code x = g.elements_[head];
    for (Code s : g.generators_) {
      Code y = g.model_->multiply(x, s);
      if (g.index_.emplace(y, static_cast<std::uint32_t>(g.elements_.size())).second) {
        g.elements_.push_back(y);
        if (g.elements_.size() > limits.max_order) limits.check_order(g.elements_.size(), g.label_);
      }
    }
  }
  return g;
}

std::optional<std::uint32_t> FinGroup::index_of(Code c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t FinGroup::require_index(Code c) const {
  auto i = index_of(c);
  if (!i) throw DomainError("element is not a member of " + label_);
  return *i;
}

FinGroup FinGroup::relabeled(std::string label) const {
  FinGroup g = *this;
  g.label_ = std::move(label);
  return g;
}

nlohmann::json FinGroup::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (Code c : generators_) gens.push_back(model_->to_json(c));
  return {{"label", label_}, {"model", model_->key()}, {"order", order()}, {"generators", gens}};
}

bool is_subgroup(const FinGroup& h, const FinGroup& g) {
  if (h.model().key() != g.model().key()) return false;
  if (h.order() > g.order() || g.order() % h.order() != 0) return false;
  return std::all_of(h.generators().begin(), h.generators().end(), [&](Code c) { return g.contains(c); });
}

void require_subgroup(const FinGroup& h, const FinGroup& g) {
  if (!is_subgroup(h, g)) throw DomainError(h.label() + " is not a subgroup of " + g.label());
}

GroupPtr subgroup_generated(const FinGroup& g, std::vector<Code> gens, std::string label) {
  for (Code c : gens)
    if (!g.contains(c)) throw DomainError("generator outside " + g.label());
  Limits lim;
  lim.max_order = g.order();
  return std::make_shared<const FinGroup>(FinGroup::generate(g.model_ptr(), std::move(gens), std::move(label), lim));
}

GroupPtr subgroup_by_filter(const FinGroup& g, const std::function<bool(Code)>& keep, std::string label) {
  std::vector<Code> members;
  for (Code c : g.elements())
    if (keep(c)) members.push_back(c);
  std::vector<Code> gens;
  Limits lim;
  lim.max_order = g.order();
  FinGroup span = FinGroup::generate(g.model_ptr(), {}, label, lim);
  for (Code c : members) {
    if (span.contains(c)) continue;
    gens.push_back(c);
    span = FinGroup::generate(g.model_ptr(), gens, label, lim);
  }
  if (span.order() != members.size())
    throw CrossCheckError("filtered set for " + label + " is not closed under multiplication");
  return std::make_shared<const FinGroup>(std::move(span));
}

std::vector<GroupPtr> all_subgroups(const FinGroup& g) {
  auto key_of = [](const FinGroup& h) {
    std::vector<Code> els(h.elements().begin(), h.elements().end());
    std::sort(els.begin(), els.end());
    return els;
  };
  std::set<std::vector<Code>> seen;
  std::vector<GroupPtr> subs;
  auto add = [&](GroupPtr h) {
    if (seen.insert(key_of(*h)).second) subs.push_back(std::move(h));
  };
  for (Code c : g.elements()) add(subgroup_generated(g, {c}, "cyclic"));
  const std::size_t cyclic_count = subs.size();
  // Close under joins with cyclic subgroups; every subgroup is such a join.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < cyclic_count; ++j) {
      if (subs[i]->contains(subs[j]->generators().empty() ? g.identity() : subs[j]->generators()[0])) continue;
      std::vector<Code> gens = subs[i]->generators();
      gens.push_back(subs[j]->generators()[0]);
      add(subgroup_generated(g, gens, "subgroup"));
    }
  }
  std::sort(subs.begin(), subs.end(), [&](const GroupPtr& a, const GroupPtr& b) {
    if (a->order() != b->order()) return a->order() < b->order();
    return key_of(*a) < key_of(*b);
  });
  for (std::size_t i = 0; i < subs.size(); ++i)
    subs[i] = std::make_shared<const FinGroup>(subs[i]->relabeled(g.label() + "/sub" + std::to_string(i)));
  return subs;
}

}  // namespace sgp::groups
