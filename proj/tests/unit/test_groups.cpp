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

#include <numeric>
#include <random>

#include "sgp/error.hpp"
#include "sgp/groups/classes.hpp"
#include "sgp/groups/construct.hpp"
#include "sgp/groups/group_spec.hpp"

namespace {

using namespace sgp::groups;

std::size_t error_column(const std::string& text) {
  try {
    parse_group_spec(text, 1);
  } catch (const SpecError& e) {
    return e.column();
  }
  return 0;
}

TEST(GroupSpec, ParsesNamesAndArguments) {
  auto s = parse_group_spec("sp4-sub:16:4");
  EXPECT_EQ(s.name, "sp4-sub");
  EXPECT_EQ(s.args, (std::vector<std::uint64_t>{16, 4}));
  EXPECT_EQ(parse_group_spec("s6").args.size(), 0u);
  EXPECT_EQ(group_spec_names().size(), 12u);
}

TEST(GroupSpec, RejectsWithColumns) {
  EXPECT_EQ(error_column("sz:4"), 4u);
  EXPECT_EQ(error_column("sz:2"), 4u);
  EXPECT_EQ(error_column("bogus:4"), 1u);
  EXPECT_EQ(error_column("sl2:6"), 5u);
  EXPECT_EQ(error_column("sl2:x"), 5u);
  EXPECT_EQ(error_column("sl2"), 1u);
  EXPECT_EQ(error_column("sp4-sub:8:4"), 11u);
  EXPECT_EQ(error_column("sp4-sub:16:2"), 12u);
  EXPECT_EQ(error_column("sl2:131072"), 5u);
  EXPECT_EQ(error_column(""), 1u);
  EXPECT_EQ(error_column("sp4-sub:64:4"), 0u);
}

TEST(GroupSpec, PredictedOrders) {
  EXPECT_EQ(predicted_order(parse_group_spec("sl2:4")), 60u);
  EXPECT_EQ(predicted_order(parse_group_spec("sp4:4")), 979200u);
  EXPECT_EQ(predicted_order(parse_group_spec("sz:8")), 29120u);
  EXPECT_EQ(predicted_order(parse_group_spec("wreath-sp2:4")), 7200u);
  EXPECT_EQ(predicted_order(parse_group_spec("ext-sp2q2:4")), 8160u);
  EXPECT_EQ(predicted_order(parse_group_spec("parabolic-q:4")), 11520u);
  EXPECT_EQ(enumeration_order(parse_group_spec("parabolic-q:4")), 979200u);
  EXPECT_EQ(predicted_order(parse_group_spec("sp4-sub:16:4")), 979200u);
}

TEST(Build, OrdersMatchPrediction) {
  for (const char* text : {"trivial", "sl2:2", "sl2:4", "sl2:8", "s6", "sp4:2", "wreath-sp2:2", "wreath-sp2:4",
                           "ext-sp2q2:2", "ext-sp2q2:4", "sz:8", "parabolic-p:2", "parabolic-q:2", "so4+:2", "so4-:2",
                           "sp4-sub:4:2"}) {
    const auto spec = parse_group_spec(text);
    EXPECT_EQ(build_group(spec)->order(), predicted_order(spec)) << text;
  }
}

TEST(Build, RefusesOverTheBound) {
  Limits small;
  small.max_order = 100;
  EXPECT_THROW(build_group("sl2:8", small), sgp::ResourceError);
  EXPECT_NO_THROW(build_group("sl2:4", small));
}

TEST(Build, GeneratorsAreSymplectic) {
  for (unsigned e : {1u, 2u, 3u}) {
    auto f = sgp::gf::field_ctx(e);
    for (const auto& m : sp4_generators(*f)) EXPECT_TRUE(is_symplectic(*f, m));
    for (const auto& m : wreath_generators(*f)) EXPECT_TRUE(is_symplectic(*f, m));
    if (e % 2 == 1 && e >= 3)
      for (const auto& m : suzuki_generators(*f)) EXPECT_TRUE(is_symplectic(*f, m));
  }
  for (std::uint64_t q : {2u, 4u}) {
    auto f = sgp::gf::field_of_size(q);
    for (const auto& m : ext_sp2q2_embedded_generators(q)) EXPECT_TRUE(is_symplectic(*f, m));
  }
}

TEST(Build, ElementsAreClosed) {
  auto g = build_group("sl2:4");
  for (auto a : g->elements())
    for (auto b : g->elements()) ASSERT_TRUE(g->contains(g->multiply(a, b)));
  for (auto a : g->elements()) EXPECT_EQ(g->multiply(a, g->inverse(a)), g->identity());
}

TEST(Build, TwistedModelIsAssociative) {
  auto g = build_group("ext-sp2q2:4");
  EXPECT_EQ(g->model().key().rfind("mat", 0) == 0, false);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g->order() - 1));
  for (int i = 0; i < 2000; ++i) {
    const Code a = g->element(pick(rng)), b = g->element(pick(rng)), c = g->element(pick(rng));
    EXPECT_EQ(g->multiply(g->multiply(a, b), c), g->multiply(a, g->multiply(b, c)));
  }
}

TEST(Subgroups, MaximalSubgroupsOfSp4) {
  auto g = build_group("sp4:4");
  auto subs = maximal_subgroups_sp4(*g);
  std::vector<std::uint64_t> orders;
  for (const auto& s : subs) {
    EXPECT_TRUE(is_subgroup(*s.group, *g)) << s.label;
    orders.push_back(s.group->order());
  }
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{11520, 11520, 7200, 8160, 720, 7200, 8160}));
  EXPECT_THROW(maximal_subgroups_sp4(*build_group("sp4:2")), sgp::DomainError);
}

TEST(Subgroups, S6Isomorphism) {
  auto s6 = build_group("s6");
  const std::vector<unsigned> a{1, 2, 3, 4, 5, 0}, b{1, 0, 2, 3, 4, 5};
  std::vector<unsigned> ab(6);
  for (unsigned i = 0; i < 6; ++i) ab[i] = a[b[i]];
  EXPECT_EQ(s6->multiply(s6_to_sp4(*s6, a), s6_to_sp4(*s6, b)), s6_to_sp4(*s6, ab));
  EXPECT_NE(s6_to_sp4(*s6, b), s6->identity());
  std::vector<std::uint64_t> orders;
  for (const auto& s : maximal_subgroups_s6(*s6)) orders.push_back(s.group->order());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{360, 120, 120, 48, 48, 72}));
  orders.clear();
  for (const auto& s : nonmaximal_subgroups_s6(*s6)) orders.push_back(s.group->order());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{60, 6, 24}));
}

TEST(Subgroups, BuildInsideParent) {
  auto g = build_group("ext-sp2q2:4");
  auto h = build_in(parse_group_spec("sl2:16"), *g);
  EXPECT_EQ(h->order(), 4080u);
  EXPECT_TRUE(is_subgroup(*h, *g));
  auto sp = build_group("sp4:2");
  auto w = build_in(parse_group_spec("wreath-sp2:2"), *sp);
  EXPECT_TRUE(is_subgroup(*w, *sp));
  EXPECT_THROW(build_in(parse_group_spec("sl2:4"), *build_group("sl2:8")), sgp::DomainError);
}

TEST(Subgroups, AllSubgroupsOfSmallGroups) {
  EXPECT_EQ(all_subgroups(*symmetric_group(4)).size(), 30u);
  EXPECT_EQ(all_subgroups(*dihedral8()).size(), 10u);
  EXPECT_EQ(all_subgroups(*quaternion8()).size(), 6u);
  EXPECT_EQ(all_subgroups(*symmetric_group(3)).size(), 6u);
}

TEST(Classes, ClassEquationAndCounts) {
  const std::pair<const char*, std::size_t> cases[] = {{"sl2:4", 5}, {"sl2:8", 9}, {"s6", 11}, {"sz:8", 11},
                                                       {"wreath-sp2:2", 9}, {"trivial", 1}};
  for (const auto& [text, count] : cases) {
    auto g = build_group(text);
    auto cd = conjugacy_classes(*g);
    EXPECT_EQ(cd.count(), count) << text;
    EXPECT_EQ(std::accumulate(cd.sizes.begin(), cd.sizes.end(), std::uint64_t{0}), g->order());
    for (std::size_t i = 0; i < cd.count(); ++i) {
      EXPECT_EQ(g->order() % cd.sizes[i], 0u);
      EXPECT_EQ(centralizer_order(*g, g->element(cd.reps[i])) * cd.sizes[i], g->order());
      EXPECT_EQ(cd.class_of[cd.reps[i]], i);
      EXPECT_EQ(cd.inverse_class[cd.inverse_class[i]], i);
    }
  }
}

TEST(Models, PermutationComposition) {
  PermModel m(4);
  const Code a = m.from_cycles({{0, 1, 2}});
  EXPECT_EQ(m.element_order(a), 3u);
  EXPECT_EQ(m.power(a, 3), m.identity());
  EXPECT_EQ(m.multiply(a, m.inverse(a)), m.identity());
  EXPECT_THROW(m.from_images({0, 0, 1, 2}), sgp::DomainError);
}

TEST(Models, MatrixEncodingRoundTrip) {
  auto f = sgp::gf::field_ctx(3);
  MatrixModel m(f, 4);
  for (const auto& g : sp4_generators(*f)) {
    EXPECT_EQ(m.decode(m.encode(g)), g);
    auto inv = mat_inverse(*f, g);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(m.inverse(m.encode(g)), m.encode(*inv));
  }
  EXPECT_FALSE(mat_inverse(*f, mat_zero(2)).has_value());
}

TEST(Models, QuadraticFormsArePreserved) {
  for (bool plus : {true, false}) {
    auto so = build_group(plus ? "so4+:2" : "so4-:2");
    const auto& mm = dynamic_cast<const MatrixModel&>(so->model());
    const auto& f = *mm.field();
    for (auto c : so->elements()) {
      const Mat g = mm.decode(c);
      for (unsigned bits = 0; bits < 16; ++bits) {
        std::array<sgp::gf::FieldElem, 4> x{}, gx{};
        for (unsigned i = 0; i < 4; ++i) x[i] = (bits >> i & 1) ? f.one() : sgp::gf::FieldElem::zero();
        for (unsigned i = 0; i < 4; ++i)
          for (unsigned j = 0; j < 4; ++j) gx[i] = f.add(gx[i], f.mul(g.at(i, j), x[j]));
        EXPECT_EQ(quadratic_form(f, plus, x), quadratic_form(f, plus, gx));
      }
    }
  }
}

}  // namespace
