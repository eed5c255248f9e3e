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

#include <algorithm>

#include "sgp/chartab/compare.hpp"
#include "sgp/chartab/dixon.hpp"
#include "sgp/error.hpp"
#include "sgp/families/families.hpp"
#include "sgp/groups/construct.hpp"

namespace {

using namespace sgp::families;
using sgp::exact::Rat;

const PolyQ q = PolyQ::var();

std::vector<Rat> sorted(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Rat> dixon_degrees(const char* text) {
  auto space = sgp::chartab::make_space(sgp::groups::build_group(text));
  return sorted(sgp::chartab::dixon_schneider(space).degrees());
}

TEST(PolyQ, RingOracles) {
  EXPECT_EQ((q + 1) * (q + 1), q * q + q * 2 + 1);
  EXPECT_EQ((q + 1).pow(3).coefficient(1), Rat(3));
  EXPECT_EQ((q * q - 1)(Rat(4)), Rat(15));
  EXPECT_EQ((q * q).compose(q + 1), (q + 1).pow(2));
  EXPECT_EQ((q * q).shifted(Rat(2)), (q + 2).pow(2));
  EXPECT_EQ((q - q).degree(), 0u);
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ((q.pow(4) + q * 2 - 1).to_string(), "q^4 + 2*q - 1");
  EXPECT_EQ(PolyQ::monomial(Rat(1, 2), 3).to_string("r"), "1/2*r^3");
  EXPECT_FALSE((q - 1).all_coefficients_nonnegative());
  EXPECT_TRUE((q - 1).shifted(Rat(1)).all_coefficients_nonnegative());
}

TEST(Families, SumOfSquaresEqualsOrder) {
  for (const auto& spec : {sl2_degree_spec(), wreath_degree_spec(), ext_degree_spec(), suzuki_degree_spec()})
    EXPECT_EQ(spec.sum_of_squares(), spec.order) << spec.family;
}

TEST(Families, EvaluationsAreIntegral) {
  for (const auto& spec : {sl2_degree_spec(), wreath_degree_spec(), ext_degree_spec()})
    for (std::uint64_t x : {4u, 8u, 16u, 32u, 1024u})
      for (const auto& row : spec.evaluate(x)) {
        EXPECT_TRUE(row.degree.is_integer() && row.degree > Rat(0)) << spec.family << " " << row.label;
        EXPECT_TRUE(row.multiplicity.is_integer() && row.multiplicity >= Rat(0)) << spec.family << " " << row.label;
      }
  for (std::uint64_t x : {8u, 32u, 128u, 2048u})
    for (const auto& row : suzuki_degree_spec().evaluate(x)) EXPECT_TRUE(row.degree.is_integer());
}

TEST(Families, ValidityRanges) {
  EXPECT_THROW(suzuki_degree_spec().variable_at(4), sgp::DomainError);
  EXPECT_THROW(suzuki_degree_spec().variable_at(2), sgp::DomainError);
  EXPECT_EQ(suzuki_degree_spec().variable_at(8), Rat(4));
  EXPECT_EQ(suzuki_degree_spec().variable_at(32), Rat(8));
  EXPECT_THROW(wreath_degree_spec().variable_at(2), sgp::DomainError);
  EXPECT_THROW(sl2_degree_spec().variable_at(6), sgp::DomainError);
  EXPECT_THROW(require_even_prime_power(12, 1, "x"), sgp::DomainError);
}

TEST(Families, MatchComputedTables) {
  EXPECT_EQ(dixon_degrees("sl2:8"), sorted(sl2_degree_spec().degree_multiset(8)));
  EXPECT_EQ(dixon_degrees("wreath-sp2:4"), sorted(wreath_degree_spec().degree_multiset(4)));
  EXPECT_EQ(dixon_degrees("ext-sp2q2:4"), sorted(ext_degree_spec().degree_multiset(4)));
  EXPECT_EQ(dixon_degrees("sz:8"), sorted(suzuki_degree_spec().degree_multiset(8)));
}

TEST(Families, Sl2ClosedFormMatchesDixon) {
  for (std::uint64_t x : {4u, 8u}) {
    auto space = sgp::chartab::make_space(sgp::groups::build_group("sl2:" + std::to_string(x)));
    EXPECT_TRUE(sgp::chartab::tables_equivalent(sl2_table(x, space), sgp::chartab::dixon_schneider(space)));
    EXPECT_FALSE(sgp::chartab::table_defect(sl2_table(x, space)).has_value());
  }
  EXPECT_THROW(sl2_table(2), sgp::DomainError);
  auto wrong = sgp::chartab::make_space(sgp::groups::build_group("sl2:4"));
  EXPECT_THROW(sl2_table(8, wrong), sgp::DomainError);
}

TEST(Families, TorusGeneratorHasOrderQPlusOne) {
  for (std::uint64_t x : {4u, 8u, 16u}) {
    auto f = sgp::gf::field_of_size(x);
    const auto b = sl2_nonsplit_torus_generator(x);
    sgp::groups::Mat p = sgp::groups::mat_identity(*f, 2);
    std::uint64_t n = 0;
    do {
      p = sgp::groups::mat_mul(*f, p, b);
      ++n;
    } while (!(p == sgp::groups::mat_identity(*f, 2)));
    EXPECT_EQ(n, x + 1);
  }
}

TEST(Families, ClosedFormTotals) {
  for (std::int64_t x : {4, 8, 16, 64}) EXPECT_EQ(ext_total_degree(x), Rat(x * x * x * x + x * x * x + x));
  EXPECT_EQ(suzuki_total_degree(8), Rat(484));
  EXPECT_EQ(suzuki_total_degree(32), Rat(32024));
  EXPECT_THROW(suzuki_total_degree(16), sgp::DomainError);
  EXPECT_THROW(ext_total_degree(2), sgp::DomainError);
  EXPECT_EQ(sp4_degree_facts(4).total, Rat(4336));
  EXPECT_EQ(sp4_degree_facts(4).max, Rat(425));
  EXPECT_EQ(sp4_degree_facts(8).total, Rat(266176));
  EXPECT_FALSE(sp4_degree_facts(2).max.has_value());
  EXPECT_EQ(ext_degree_spec().total_degree()(Rat(8)), ext_total_degree(8));
}

TEST(Families, SplitRuleAtFour) {
  std::vector<std::uint64_t> split;
  for (std::uint64_t s = 1; s <= 7; ++s)
    if (ext_split_rule(4, s) == sgp::chartab::SplitFuse::split) split.push_back(s);
  EXPECT_EQ(split, (std::vector<std::uint64_t>{3, 5, 6}));
}

TEST(Alpha, KnownValues) {
  for (std::int64_t x : {8, 16, 32, 64}) {
    const AlphaParams p{static_cast<std::uint64_t>(x), x - 4, 1, 2};
    EXPECT_EQ(alpha_sum(p).cyclotomic, Rat(x - 5));
    EXPECT_EQ(parabolic_inner_product(p), Rat(2));
  }
}

TEST(Alpha, RoutesAgreeOnEveryTripleAtSixteen) {
  for (std::int64_t k = 1; k <= 14; ++k)
    for (std::int64_t m = 1; m <= 14; ++m)
      for (std::int64_t n = 1; n <= 14; ++n) {
        if (m == n || m + n == 15) continue;
        const auto a = alpha_sum({16, k, m, n});
        ASSERT_EQ(a.cyclotomic, a.counting) << k << " " << m << " " << n;
      }
}

TEST(Alpha, Validation) {
  EXPECT_THROW(validate({8, 0, 1, 2}), sgp::DomainError);
  EXPECT_THROW(validate({8, 7, 1, 2}), sgp::DomainError);
  EXPECT_THROW(validate({8, 1, 2, 2}), sgp::DomainError);
  EXPECT_THROW(validate({8, 1, 3, 4}), sgp::DomainError);
  EXPECT_THROW(validate({12, 1, 2, 3}), sgp::DomainError);
  EXPECT_THROW(parabolic_inner_product({4, 1, 1, 2}), sgp::DomainError);
  EXPECT_THROW(validate({4, 1, 1, 2}), sgp::DomainError);
  EXPECT_NO_THROW(validate({8, 2, 1, 3}));
}

}  // namespace
