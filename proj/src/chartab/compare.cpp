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

#include "sgp/chartab/compare.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace sgp::chartab {
namespace {

using Grid = std::vector<std::vector<int>>;  // [row][col] value id

struct Search {
  const Grid& a;
  const Grid& b;
  const std::vector<std::uint64_t>& size_a;
  const std::vector<std::uint64_t>& size_b;
  std::size_t k;
  std::vector<std::size_t> cols;
  std::vector<bool> used;

  bool compatible(const std::vector<int>& sig_a, const std::vector<int>& sig_b) const {
    std::vector<int> x = sig_a, y = sig_b;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  bool run(std::size_t c, const std::vector<int>& sig_a, const std::vector<int>& sig_b) {
    if (c == k) return true;
    for (std::size_t cb = 0; cb < k; ++cb) {
      if (used[cb] || size_a[c] != size_b[cb]) continue;
      std::map<std::pair<int, int>, int> ids;
      std::vector<int> na(k), nb(k);
      for (std::size_t r = 0; r < k; ++r)
        na[r] = ids.emplace(std::make_pair(sig_a[r], a[r][c]), static_cast<int>(ids.size())).first->second;
      for (std::size_t r = 0; r < k; ++r)
        nb[r] = ids.emplace(std::make_pair(sig_b[r], b[r][cb]), static_cast<int>(ids.size())).first->second;
      if (!compatible(na, nb)) continue;
      used[cb] = true;
      cols[c] = cb;
      if (run(c + 1, na, nb)) return true;
      used[cb] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<TableMatch> match_tables(const CharTable& a, const CharTable& b) {
  const std::size_t k = a.size();
  if (b.size() != k || a.space->class_count() != k || b.space->class_count() != k) return std::nullopt;
  if (a.space->order() != b.space->order()) return std::nullopt;
  std::uint32_t n = 1;
  for (const CharTable* t : {&a, &b})
    for (const auto& c : t->irreducibles)
      for (const auto& v : c.values) n = exact::lcm_order(n, v.order());
  std::map<std::string, int> value_ids;
  auto grid = [&](const CharTable& t) {
    Grid g(k, std::vector<int>(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        g[r][c] = value_ids.emplace(t[r].values[c].key_at(n), static_cast<int>(value_ids.size())).first->second;
    return g;
  };
  const Grid ga = grid(a), gb = grid(b);
  std::vector<std::uint64_t> sa(k), sb(k);
  for (std::size_t c = 0; c < k; ++c) {
    sa[c] = a.space->class_size(c);
    sb[c] = b.space->class_size(c);
  }
  Search s{ga, gb, sa, sb, k, std::vector<std::size_t>(k), std::vector<bool>(k, false)};
  if (!s.run(0, std::vector<int>(k, 0), std::vector<int>(k, 0))) return std::nullopt;
  TableMatch m{std::vector<std::size_t>(k), s.cols};
  std::vector<bool> taken(k, false);
  for (std::size_t r = 0; r < k; ++r) {
    bool found = false;
    for (std::size_t rb = 0; rb < k && !found; ++rb) {
      if (taken[rb]) continue;
      bool same = true;
      for (std::size_t c = 0; c < k && same; ++c) same = ga[r][c] == gb[rb][s.cols[c]];
      if (same) {
        m.rows[r] = rb;
        taken[rb] = true;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return m;
}

bool tables_equivalent(const CharTable& a, const CharTable& b) { return match_tables(a, b).has_value(); }

}  // namespace sgp::chartab
