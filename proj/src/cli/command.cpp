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

#include "sgp/cli/command.hpp"

#include <charconv>
#include <sstream>

#include "sgp/families/families.hpp"
#include "sgp/gf/field.hpp"

namespace sgp::cli {

using groups::SpecError;

namespace {

struct VerbShape {
  const char* name;
  Verb verb;
};

constexpr VerbShape kVerbs[] = {
    {"chartab", Verb::chartab},           {"sgp", Verb::sgp},
    {"scan-maximal", Verb::scan_maximal}, {"alpha-sum", Verb::alpha_sum},
    {"families", Verb::families},         {"verify-paper", Verb::verify_paper},
    {"show-field", Verb::show_field},
};

std::string usage(Verb v) {
  switch (v) {
    case Verb::chartab: return "chartab SPEC";
    case Verb::sgp: return "sgp G H";
    case Verb::scan_maximal: return "scan-maximal Q";
    case Verb::alpha_sum: return "alpha-sum Q K M N";
    case Verb::families: return "families NAME Q";
    case Verb::verify_paper: return "verify-paper";
    case Verb::show_field: return "show-field Q";
  }
  return {};
}

std::size_t expected_args(Verb v) {
  switch (v) {
    case Verb::chartab: return 1;
    case Verb::sgp: return 2;
    case Verb::scan_maximal: return 1;
    case Verb::alpha_sum: return 4;
    case Verb::families: return 2;
    case Verb::verify_paper: return 0;
    case Verb::show_field: return 1;
  }
  return 0;
}

std::int64_t parse_integer(const std::string& tok, std::size_t column) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw SpecError(column, "expected an integer, got '" + tok + "'");
  return v;
}

unsigned parse_field_size(const std::string& tok, std::size_t column, unsigned min_e) {
  const std::int64_t v = parse_integer(tok, column);
  const unsigned e = v > 0 ? gf::log2_exact(static_cast<std::uint64_t>(v)) : 0;
  if (e == 0) throw SpecError(column, "field size must be a power of two >= 2, got " + tok);
  if (e > 16) throw SpecError(column, "field size 2^" + std::to_string(e) + " exceeds GF(2^16)");
  if (e < min_e) throw SpecError(column, "q = " + tok + " is below the minimum 2^" + std::to_string(min_e));
  return e;
}

void check_bound(const groups::GroupSpec& spec, const Options& options) {
  const std::uint64_t n = groups::enumeration_order(spec);
  if (n > options.max_order)
    throw ResourceError(spec.text + ": enumeration needs " + std::to_string(n) + " elements, over --max-order " +
                        std::to_string(options.max_order));
}

}  // namespace

const std::vector<std::string>& verb_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kVerbs) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"sl2", "wreath-sp2", "ext-sp2q2", "sz", "sp4"};
  return names;
}

std::string to_string(Verb v) {
  for (const auto& s : kVerbs)
    if (s.verb == v) return s.name;
  return "?";
}

Command parse_command(const std::vector<std::string>& words, const Options& options) {
  Command cmd;
  cmd.options = options;
  std::vector<std::size_t> columns;
  std::size_t col = 1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) cmd.text += ' ';
    cmd.text += words[i];
    columns.push_back(col);
    col += words[i].size() + 1;
  }
  if (words.empty()) throw SpecError(1, "missing verb");

  const VerbShape* shape = nullptr;
  for (const auto& s : kVerbs)
    if (words[0] == s.name) shape = &s;
  if (!shape) throw SpecError(1, "unknown verb '" + words[0] + "'");
  cmd.verb = shape->verb;

  const std::size_t want = expected_args(cmd.verb);
  if (words.size() - 1 != want) {
    const std::size_t at = words.size() - 1 > want ? columns[want + 1] : col;
    throw SpecError(at, "usage: " + usage(cmd.verb));
  }
  if (options.deep || options.full) {
    if (cmd.verb != Verb::verify_paper) throw SpecError(1, "--deep/--full only apply to verify-paper");
  }
  if (options.format == Format::csv && cmd.verb != Verb::chartab && cmd.verb != Verb::scan_maximal &&
      cmd.verb != Verb::families)
    throw SpecError(1, "--format csv is not available for " + words[0]);

  switch (cmd.verb) {
    case Verb::chartab:
      cmd.groups.push_back(groups::parse_group_spec(words[1], columns[1]));
      check_bound(cmd.groups[0], options);
      break;
    case Verb::sgp:
      for (int i = 1; i <= 2; ++i) cmd.groups.push_back(groups::parse_group_spec(words[i], columns[i]));
      if (groups::predicted_order(cmd.groups[0]) % groups::predicted_order(cmd.groups[1]) != 0)
        throw SpecError(columns[2], "|" + words[2] + "| does not divide |" + words[1] + "|");
      check_bound(cmd.groups[0], options);
      check_bound(cmd.groups[1], options);
      break;
    case Verb::scan_maximal: {
      const unsigned e = parse_field_size(words[1], columns[1], 1);
      if (e > 2) throw SpecError(columns[1], "scan-maximal supports q = 2 (S6) and q = 4 only");
      cmd.integers.push_back(std::int64_t{1} << e);
      check_bound(groups::parse_group_spec("sp4:" + words[1]), options);
      break;
    }
    case Verb::alpha_sum: {
      const unsigned e = parse_field_size(words[1], columns[1], 1);
      families::AlphaParams p{std::uint64_t{1} << e, 0, 0, 0};
      p.k = parse_integer(words[2], columns[2]);
      p.m = parse_integer(words[3], columns[3]);
      p.n = parse_integer(words[4], columns[4]);
      try {
        families::validate(p);
      } catch (const DomainError& ex) {
        throw SpecError(columns[2], ex.what());
      }
      cmd.integers = {static_cast<std::int64_t>(p.q), p.k, p.m, p.n};
      break;
    }
    case Verb::families: {
      bool known = false;
      for (const auto& n : family_names()) known = known || n == words[1];
      if (!known) throw SpecError(columns[1], "unknown family '" + words[1] + "'");
      cmd.family = words[1];
      const unsigned e = parse_field_size(words[2], columns[2], 1);
      const std::uint64_t q = std::uint64_t{1} << e;
      try {
        if (cmd.family == "sl2") families::sl2_degree_spec().variable_at(q);
        if (cmd.family == "wreath-sp2") families::wreath_degree_spec().variable_at(q);
        if (cmd.family == "ext-sp2q2") families::ext_degree_spec().variable_at(q);
        if (cmd.family == "sz") families::suzuki_degree_spec().variable_at(q);
        if (cmd.family == "sp4") families::require_even_prime_power(q, 1, "sp4");
      } catch (const DomainError& ex) {
        throw SpecError(columns[2], ex.what());
      }
      cmd.integers.push_back(static_cast<std::int64_t>(q));
      break;
    }
    case Verb::show_field:
      cmd.integers.push_back(std::int64_t{1} << parse_field_size(words[1], columns[1], 1));
      break;
    case Verb::verify_paper:
      break;
  }
  return cmd;
}

Command parse_command(std::string_view line, const Options& options) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : line) {
    if (c == ' ') {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return parse_command(words, options);
}

}  // namespace sgp::cli
