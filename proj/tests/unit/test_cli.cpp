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

#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "sgp/cli/acceptance.hpp"
#include "sgp/cli/command.hpp"
#include "sgp/cli/run.hpp"
#include "sgp/error.hpp"

namespace {

using namespace sgp::cli;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::string& line, Options opts = {}) {
  std::vector<std::string> words;
  std::istringstream is(line);
  for (std::string w; is >> w;) words.push_back(w);
  std::ostringstream out, err;
  const int code = run_words(words, opts, out, err);
  return {code, out.str(), err.str()};
}

std::size_t column_of(const std::string& line) {
  try {
    parse_command(std::string_view(line));
  } catch (const sgp::groups::SpecError& e) {
    return e.column();
  }
  return 0;
}

TEST(Parse, Examples) {
  auto c = parse_command(std::string_view("sgp sp4:4 wreath-sp2:4"));
  EXPECT_EQ(c.verb, Verb::sgp);
  ASSERT_EQ(c.groups.size(), 2u);
  EXPECT_EQ(c.groups[1].name, "wreath-sp2");
  EXPECT_EQ(c.groups[1].column, 11u);
  auto a = parse_command(std::string_view("alpha-sum 8 4 1 2"));
  EXPECT_EQ(a.verb, Verb::alpha_sum);
  EXPECT_EQ(a.integers, (std::vector<std::int64_t>{8, 4, 1, 2}));
  EXPECT_EQ(column_of("chartab sz:4"), 12u);
}

TEST(Parse, PositionAnnotatedErrors) {
  EXPECT_EQ(column_of("frobnicate s6"), 1u);
  EXPECT_EQ(column_of(""), 1u);
  EXPECT_EQ(column_of("chartab"), 9u);
  EXPECT_EQ(column_of("chartab s6 s6"), 12u);
  EXPECT_EQ(column_of("chartab nope:4"), 9u);
  EXPECT_EQ(column_of("alpha-sum 8 4 x 2"), 15u);
  EXPECT_EQ(column_of("alpha-sum 8 4 3 4"), 13u);
  EXPECT_EQ(column_of("alpha-sum 6 1 1 2"), 11u);
  EXPECT_EQ(column_of("families sz 16"), 13u);
  EXPECT_EQ(column_of("families e8 4"), 10u);
  EXPECT_EQ(column_of("scan-maximal 8"), 14u);
  EXPECT_EQ(column_of("sgp sl2:4 sl2:8"), 11u);
  EXPECT_EQ(column_of("show-field 3"), 12u);
  EXPECT_EQ(column_of("verify-paper"), 0u);
}

TEST(Parse, FlagCombinations) {
  Options o;
  o.deep = true;
  EXPECT_THROW(parse_command(std::string_view("chartab s6"), o), sgp::groups::SpecError);
  Options csv;
  csv.format = Format::csv;
  EXPECT_THROW(parse_command(std::string_view("alpha-sum 8 4 1 2"), csv), sgp::groups::SpecError);
  EXPECT_NO_THROW(parse_command(std::string_view("chartab s6"), csv));
}

TEST(Parse, OrderBoundBeforeEnumeration) {
  Options o;
  o.max_order = 1000;
  EXPECT_THROW(parse_command(std::string_view("chartab sp4:4"), o), sgp::ResourceError);
  EXPECT_THROW(parse_command(std::string_view("chartab parabolic-p:4"), o), sgp::ResourceError);
  EXPECT_THROW(parse_command(std::string_view("scan-maximal 4"), o), sgp::ResourceError);
  EXPECT_NO_THROW(parse_command(std::string_view("chartab s6"), o));
  EXPECT_THROW(parse_command(std::string_view("chartab sp4:16")), sgp::ResourceError);
}

TEST(Run, AlphaSumLine) {
  const auto r = invoke("alpha-sum 8 4 1 2");
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "3 (= q-5); inner product = 2");
  EXPECT_NE(r.out.find("cyclotomic route: 3"), std::string::npos);
  EXPECT_NE(r.out.find("counting route:   3"), std::string::npos);
}

TEST(Run, ChartabJsonIsFiveByFiveAndDeterministic) {
  Options o;
  o.format = Format::json;
  const auto r = invoke("chartab sl2:4", o);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"].size(), 5u);
  EXPECT_EQ(j["irreducibles"].size(), 5u);
  for (const auto& row : j["irreducibles"]) EXPECT_EQ(row["values"].size(), 5u);
  EXPECT_EQ(invoke("chartab sl2:4", o).out, r.out);
}

TEST(Run, ShowField) {
  Options o;
  o.show_field = true;
  o.format = Format::json;
  const auto j = nlohmann::json::parse(invoke("chartab sl2:8", o).out);
  EXPECT_EQ(j["field"]["modulus"], "x^3 + x + 1");
  EXPECT_EQ(invoke("show-field 16").out, "GF(16) = GF(2)[x]/(x^4 + x + 1), mask 0x13, gamma = x\n");
}

TEST(Run, ScanMaximalOverTwo) {
  const auto r = invoke("scan-maximal 2");
  EXPECT_EQ(r.code, kOk);
  std::size_t sgp_lines = 0;
  for (std::size_t p = r.out.find(" sgp (full_check)"); p != std::string::npos;
       p = r.out.find(" sgp (full_check)", p + 1))
    ++sgp_lines;
  EXPECT_EQ(sgp_lines, 6u);
}

TEST(Run, SgpQuery) {
  Options o;
  o.format = Format::json;
  const auto r = invoke("sgp s6 sp4:2", o);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "sgp");
  const auto w = invoke("sgp sp4:2 wreath-sp2:2");
  EXPECT_EQ(w.code, kOk) << w.err;
  EXPECT_NE(w.out.find("sgp (full_check)"), std::string::npos);
}

TEST(Run, Families) {
  const auto r = invoke("families sz 8");
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("total degree 484, sum of squares 29120"), std::string::npos);
  Options csv;
  csv.format = Format::csv;
  EXPECT_EQ(invoke("families sl2 4", csv).out.rfind("label,degree,multiplicity\n", 0), 0u);
  EXPECT_NE(invoke("families sp4 4").out.find("= 4336"), std::string::npos);
}

TEST(Run, ExitCodes) {
  const auto bad = invoke("chartab sz:4");
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("column 12"), std::string::npos);
  EXPECT_NE(bad.err.find("           ^"), std::string::npos);
  Options small;
  small.max_order = 100;
  EXPECT_EQ(invoke("chartab sl2:8", small).code, kResource);
  Options hurry;
  hurry.time_budget_seconds = 1e-6;
  EXPECT_EQ(invoke("chartab sp4:4", hurry).code, kResource);
  EXPECT_EQ(invoke("sgp sl2:4 sz:8").code, kUsage);
}

TEST(Acceptance, DefaultTierPassesAndSkipsTheRest) {
  std::vector<int> seen;
  const auto results = run_acceptance(Tier::basic, [&](const CriterionResult& r) { seen.push_back(r.id); });
  ASSERT_EQ(results.size(), 10u);
  EXPECT_EQ(seen, (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  for (const auto& r : results) {
    if (r.skipped) {
      EXPECT_NE(r.tier, Tier::basic);
      EXPECT_EQ(format_result(r).rfind("[SKIP]", 0), 0u);
    } else {
      EXPECT_TRUE(r.passed) << format_result(r);
    }
  }
}

}  // namespace
