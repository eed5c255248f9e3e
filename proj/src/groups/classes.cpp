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

#include "sgp/groups/classes.hpp"

#include "sgp/error.hpp"

namespace sgp::groups {
namespace {

constexpr std::uint32_t kUnassigned = 0xFFFFFFFFu;

ClassData orbits_under(const FinGroup& g, const std::vector<Code>& conjugators, const Limits& limits) {
  const Model& m = g.model();
  std::vector<Code> inv;
  inv.reserve(conjugators.size());
  for (Code s : conjugators) inv.push_back(m.inverse(s));

  ClassData cd;
  const auto n = static_cast<std::uint32_t>(g.order());
  cd.class_of.assign(n, kUnassigned);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (cd.class_of[start] != kUnassigned) continue;
    if ((cd.reps.size() & 0xFF) == 0) limits.check_time("class enumeration");
    const auto cls = static_cast<std::uint32_t>(cd.reps.size());
    cd.reps.push_back(start);
    cd.class_of[start] = cls;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Code x = g.element(queue[head]);
      for (std::size_t k = 0; k < conjugators.size(); ++k) {
        const Code y = m.multiply(inv[k], m.multiply(x, conjugators[k]));
        const std::uint32_t iy = g.require_index(y);
        if (cd.class_of[iy] == kUnassigned) {
          cd.class_of[iy] = cls;
          queue.push_back(iy);
        }
      }
    }
    cd.sizes.push_back(queue.size());
  }
  cd.inverse_class.resize(cd.reps.size());
  cd.rep_orders.resize(cd.reps.size());
  for (std::size_t i = 0; i < cd.reps.size(); ++i) {
    const Code r = g.element(cd.reps[i]);
    cd.inverse_class[i] = cd.class_of[g.require_index(m.inverse(r))];
    cd.rep_orders[i] = m.element_order(r);
  }
  return cd;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> ClassData::members() const {
  std::vector<std::vector<std::uint32_t>> out(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) out[i].reserve(sizes[i]);
  for (std::uint32_t x = 0; x < class_of.size(); ++x) out[class_of[x]].push_back(x);
  return out;
}

ClassData conjugacy_classes(const FinGroup& g, const Limits& limits) {
  return orbits_under(g, g.generators(), limits);
}

ClassData h_classes(const FinGroup& g, const FinGroup& h, const Limits& limits) {
  require_subgroup(h, g);
  return orbits_under(g, h.generators(), limits);
}

std::uint64_t centralizer_order(const FinGroup& g, Code c) {
  g.require_index(c);
  std::uint64_t n = 0;
  for (Code x : g.elements())
    if (g.multiply(x, c) == g.multiply(c, x)) ++n;
  return n;
}

}  // namespace sgp::groups
