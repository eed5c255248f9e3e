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

#include "sgp/groups/group_spec.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "sgp/gf/field.hpp"

namespace sgp::groups {
namespace {

struct Shape {
  const char* name;
  std::size_t arity;
};

constexpr Shape kShapes[] = {
    {"sl2", 1},    {"sp4", 1},  {"wreath-sp2", 1}, {"ext-sp2q2", 1}, {"parabolic-p", 1}, {"parabolic-q", 1},
    {"sz", 1},     {"sp4-sub", 2}, {"so4+", 1},    {"so4-", 1},      {"s6", 0},          {"trivial", 0},
};

using u128 = unsigned __int128;

std::uint64_t saturate(u128 v) {
  return v > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                       : static_cast<std::uint64_t>(v);
}

u128 sp4_order(u128 q) { return q * q * q * q * (q * q - 1) * (q * q * q * q - 1); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

SpecError::SpecError(std::size_t column, const std::string& what)
    : DomainError("column " + std::to_string(column) + ": " + what), column_(column) {}

const std::vector<std::string>& group_spec_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kShapes) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

GroupSpec parse_group_spec(std::string_view text, std::size_t column) {
  GroupSpec spec;
  spec.text = std::string(text);
  spec.column = column;
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      parts.emplace_back(text.substr(start, i - start), column + start);
      start = i + 1;
    }
  }
  if (parts[0].first.empty()) throw SpecError(column, "empty group name");
  spec.name = std::string(parts[0].first);
  const Shape* shape = nullptr;
  for (const auto& s : kShapes)
    if (spec.name == s.name) shape = &s;
  if (!shape) throw SpecError(column, "unknown group name '" + spec.name + "'");
  if (parts.size() - 1 != shape->arity)
    throw SpecError(column, "'" + spec.name + "' takes " + std::to_string(shape->arity) + " argument(s), got " +
                                std::to_string(parts.size() - 1));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto [tok, col] = parts[i];
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw SpecError(col, "expected a positive integer, got '" + std::string(tok) + "'");
    unsigned e = gf::log2_exact(v);
    if (e == 0) throw SpecError(col, "field size must be a power of two >= 2, got " + std::to_string(v));
    if (e > 16) throw SpecError(col, "field size 2^" + std::to_string(e) + " exceeds GF(2^16)");
    spec.args.push_back(v);
  }
  if (spec.name == "sz") {
    unsigned e = gf::log2_exact(spec.q());
    if (e % 2 == 0)
      throw SpecError(parts[1].second, "Suzuki groups need q = 2^e with e odd; e = " + std::to_string(e) + " is even");
    if (e < 3) throw SpecError(parts[1].second, "Suzuki groups need q = 2^(2n+1) with n >= 1");
  }
  if (spec.name == "sp4-sub") {
    const std::uint64_t q = spec.args[0], q0 = spec.args[1];
    const unsigned e = gf::log2_exact(q), e0 = gf::log2_exact(q0);
    if (e % e0 != 0 || !is_prime(e / e0))
      throw SpecError(parts[2].second, "sp4-sub:q:q0 needs q = q0^r with r prime; got q = " + std::to_string(q) +
                                           ", q0 = " + std::to_string(q0));
  }
  return spec;
}

std::uint64_t predicted_order(const GroupSpec& spec) {
  const u128 q = spec.q();
  const std::string& n = spec.name;
  if (n == "sl2") return saturate(q * (q * q - 1));
  if (n == "sp4") return saturate(sp4_order(q));
  if (n == "wreath-sp2" || n == "so4+") return saturate(2 * q * q * (q * q - 1) * (q * q - 1));
  if (n == "ext-sp2q2" || n == "so4-") return saturate(2 * q * q * (q * q * q * q - 1));
  if (n == "parabolic-p" || n == "parabolic-q") return saturate(q * q * q * (q * q + q) * (q - 1) * (q - 1));
  if (n == "sz") return saturate(q * q * (q * q + 1) * (q - 1));
  if (n == "sp4-sub") return saturate(sp4_order(spec.args[1]));
  if (n == "s6") return 720;
  if (n == "trivial") return 1;
  throw DomainError("unknown group name '" + n + "'");
}

std::uint64_t enumeration_order(const GroupSpec& spec) {
  const std::string& n = spec.name;
  if (n == "parabolic-p" || n == "parabolic-q" || n == "so4+" || n == "so4-")
    return saturate(sp4_order(spec.q()));
  return predicted_order(spec);
}

}  // namespace sgp::groups
