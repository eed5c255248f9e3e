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
#include "sgp/chartab/export.hpp"
#include "sgp/chartab/modp.hpp"
#include "sgp/error.hpp"
#include "sgp/families/families.hpp"
#include "sgp/groups/construct.hpp"

namespace {

using namespace sgp::chartab;
using sgp::exact::Cyclo;
using sgp::exact::Rat;
namespace grp = sgp::groups;

CharTable table_of(const grp::GroupPtr& g) { return dixon_schneider(make_space(g)); }

std::vector<Rat> sorted_degrees(const CharTable& t) {
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<Rat> rats(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

TEST(ModP, ArithmeticOracles) {
  EXPECT_EQ(modp::powmod(3, 200, 1000003), 333986u);
  EXPECT_EQ(modp::mulmod(modp::invmod(17, 101), 17, 101), 1u);
  EXPECT_TRUE(modp::is_prime(1000003));
  EXPECT_FALSE(modp::is_prime(1000001));
  EXPECT_FALSE(modp::is_prime(1));
  EXPECT_THROW(modp::invmod(0, 7), sgp::CrossCheckError);
}

TEST(ModP, PrimeChoice) {
  const modp::u64 p = modp::choose_prime(60, 720);
  EXPECT_TRUE(modp::is_prime(p));
  EXPECT_EQ(p % 60, 1u);
  EXPECT_GT(p * p, 4u * 720u);
  const modp::u64 z = modp::root_of_unity(60, p);
  EXPECT_EQ(modp::powmod(z, 60, p), 1u);
  for (modp::u64 d : {2u, 3u, 5u}) EXPECT_NE(modp::powmod(z, 60 / d, p), 1u);
}

TEST(ModP, CharpolyRootsNullspace) {
  const modp::u64 p = 101;
  const modp::Matrix a = {{2, 0, 0}, {1, 2, 0}, {0, 0, 5}};
  const auto cp = modp::charpoly(a, p);
  // (x - 2)^2 (x - 5) = x^3 - 9x^2 + 24x - 20
  EXPECT_EQ(cp, (modp::Poly{p - 20, 24, p - 9, 1}));
  EXPECT_EQ(modp::roots(cp, p), (std::vector<modp::u64>{2, 5}));
  modp::Matrix shifted = a;
  for (int i = 0; i < 3; ++i) shifted[i][i] = modp::submod(shifted[i][i], 2, p);
  EXPECT_EQ(modp::nullspace(shifted, p).size(), 1u);
  modp::Matrix m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(modp::rref(m, p).size(), 2u);
  EXPECT_EQ(m.size(), 2u);
}

TEST(Dixon, SmallGroupDegrees) {
  EXPECT_EQ(sorted_degrees(table_of(grp::symmetric_group(3))), rats({1, 1, 2}));
  EXPECT_EQ(sorted_degrees(table_of(grp::symmetric_group(4))), rats({1, 1, 2, 3, 3}));
  EXPECT_EQ(sorted_degrees(table_of(grp::quaternion8())), rats({1, 1, 1, 1, 2}));
  EXPECT_EQ(sorted_degrees(table_of(grp::build_group("trivial"))), rats({1}));
  EXPECT_EQ(sorted_degrees(table_of(grp::build_group("s6"))), rats({1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16}));
  EXPECT_EQ(sorted_degrees(table_of(grp::build_group("sl2:2"))), rats({1, 1, 2}));
}

TEST(Dixon, TablesPassOrthogonality) {
  for (const char* text : {"sl2:4", "sl2:8", "s6", "wreath-sp2:2", "ext-sp2q2:2", "parabolic-p:2", "so4-:2"}) {
    const auto t = table_of(grp::build_group(text));
    EXPECT_FALSE(table_defect(t).has_value()) << text << ": " << table_defect(t).value_or("");
  }
  for (auto g : {grp::symmetric_group(5), grp::dihedral8(), grp::quaternion8()})
    EXPECT_FALSE(table_defect(table_of(g)).has_value()) << g->label();
}

TEST(Dixon, RowsAreLabelledAndTrivialFirst) {
  for (const char* text : {"sl2:8", "s6", "wreath-sp2:2"}) {
    const auto t = table_of(grp::build_group(text));
    EXPECT_EQ(t[0].label, "X.1");
    EXPECT_EQ(t[0], trivial_character(t.space)) << text;
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_LE(t[i - 1].degree(), t[i].degree());
  }
}

TEST(Dixon, RespectsDeadline) {
  grp::Limits l;
  l.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(dixon_schneider(make_space(grp::build_group("s6")), l), sgp::ResourceError);
}

TEST(Compare, EquivalenceUpToPermutation) {
  const auto a = table_of(grp::dihedral8());
  const auto b = table_of(grp::quaternion8());
  EXPECT_TRUE(tables_equivalent(a, b));
  CharTable shuffled = a;
  std::reverse(shuffled.irreducibles.begin(), shuffled.irreducibles.end());
  auto m = match_tables(a, shuffled);
  ASSERT_TRUE(m.has_value());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.space->class_count(); ++j)
      EXPECT_EQ(a[i].values[j], shuffled[m->rows[i]].values[m->cols[j]]);
  CharTable broken = a;
  broken.irreducibles[1].values[1] = broken.irreducibles[1].values[1] + Cyclo(2);
  EXPECT_FALSE(tables_equivalent(a, broken));
  EXPECT_FALSE(tables_equivalent(a, table_of(grp::symmetric_group(3))));
}

TEST(Characters, InducedTrivialIsPermutationCharacter) {
  auto s4 = grp::symmetric_group(4);
  auto g = make_space(s4);
  for (const auto& h : grp::all_subgroups(*s4)) {
    auto hs = make_space(h);
    const Character pi = induce(trivial_character(hs), g);
    EXPECT_EQ(pi.degree(), Rat(static_cast<std::int64_t>(s4->order() / h->order())));
    for (std::size_t c = 0; c < g->class_count(); ++c) {
      const auto x = g->rep(c);
      std::uint64_t fixed = 0;  // cosets tH with x tH = tH
      for (auto t : s4->elements()) fixed += h->contains(s4->multiply(s4->inverse(t), s4->multiply(x, t)));
      EXPECT_EQ(pi.values[c], Cyclo(static_cast<std::int64_t>(fixed / h->order())));
    }
  }
}

TEST(Characters, FrobeniusReciprocityOnIrreducibles) {
  auto s5 = grp::symmetric_group(5);
  const auto g = table_of(s5);
  for (const auto& h : grp::all_subgroups(*s5)) {
    if (h->order() < 10) continue;
    const auto ht = table_of(h);
    for (const auto& psi : ht.irreducibles)
      for (const auto& chi : g.irreducibles)
        EXPECT_EQ(inner_product(induce(psi, g.space), chi), inner_product(psi, restrict(chi, ht.space)));
  }
}

TEST(Characters, RegularAndTotal) {
  const auto t = table_of(grp::build_group("sl2:4"));
  const auto reg = regular_character(t.space);
  const auto coeffs = decompose(reg, t);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(coeffs[i], t[i].degree());
  EXPECT_EQ(total_character(t).degree(), Rat(1 + 3 + 3 + 4 + 5));
  EXPECT_EQ(inner_product(t[2], t[2]), Rat(1));
  EXPECT_THROW(inner_product(t[0], trivial_character(make_space(grp::symmetric_group(3)))), sgp::DomainError);
}

TEST(Characters, SplitFuseNeedsIndexTwo) {
  auto s6 = grp::build_group("s6");
  auto g = make_space(s6);
  auto subs = grp::maximal_subgroups_s6(*s6);
  const auto a6 = table_of(subs[0].group);
  std::size_t split = 0;
  for (const auto& psi : a6.irreducibles) split += split_fuse(psi, g) == SplitFuse::split;
  // A6 has 7 irreducibles: S6 has 11 = 2 * split + (7 - split) / 2
  EXPECT_EQ(2 * split + (a6.size() - split) / 2, 11u);
  const auto s5 = table_of(subs[1].group);
  EXPECT_THROW(split_fuse(s5[0], g), sgp::DomainError);
  EXPECT_EQ(to_string(SplitFuse::fuse), "fuse");
}

TEST(Characters, PowerMapsAndClassLookup) {
  auto g = make_space(grp::build_group("sl2:8"));
  for (std::size_t i = 0; i < g->class_count(); ++i) {
    EXPECT_EQ(g->class_of(g->rep(i)), i);
    EXPECT_EQ(g->power_class(i, 1), i);
    EXPECT_EQ(g->power_class(i, g->exponent()), 0u);
  }
}

TEST(Export, JsonShapeAndDeterminism) {
  const auto t = sgp::families::sl2_table(4);
  const auto j = table_to_json(t);
  EXPECT_EQ(j["order"], 60);
  EXPECT_EQ(j["classes"].size(), 5u);
  EXPECT_EQ(j["irreducibles"].size(), 5u);
  for (const auto& row : j["irreducibles"]) EXPECT_EQ(row["values"].size(), 5u);
  EXPECT_EQ(j.dump(), table_to_json(sgp::families::sl2_table(4)).dump());
  EXPECT_EQ(j["irreducibles"][0]["label"], "Tr");
}

TEST(Export, CsvIsMarkedLossy) {
  const auto csv = table_to_csv(table_of(grp::symmetric_group(3)));
  EXPECT_EQ(csv.rfind("# lossy", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_NE(table_to_pretty(table_of(grp::symmetric_group(3))).find("X.3"), std::string::npos);
}

}  // namespace
