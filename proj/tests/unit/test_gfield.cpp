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

#include "sgp/error.hpp"
#include "sgp/gf/field.hpp"

namespace {

using sgp::gf::FieldCtx;
using sgp::gf::FieldElem;

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned e) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < 32; ++i)
    if (b >> i & 1) r ^= std::uint64_t{a} << i;
  for (int i = 2 * static_cast<int>(e); i >= static_cast<int>(e); --i)
    if (r >> i & 1) r ^= std::uint64_t{modulus} << (i - e);
  return static_cast<std::uint32_t>(r);
}

std::vector<FieldElem> all_elements(const FieldCtx& f) {
  std::vector<FieldElem> v{FieldElem::zero()};
  for (std::uint32_t k = 0; k + 1 < f.order(); ++k) v.push_back(FieldElem::from_log(k));
  return v;
}

TEST(Field, FrozenModuli) {
  EXPECT_EQ(sgp::gf::primitive_polynomial(1), 0x3u);
  EXPECT_EQ(sgp::gf::primitive_polynomial(2), 0x7u);
  EXPECT_EQ(sgp::gf::primitive_polynomial(4), 0x13u);
  EXPECT_EQ(sgp::gf::primitive_polynomial(8), 0x11Du);
  EXPECT_EQ(sgp::gf::polynomial_string(0x13), "x^4 + x + 1");
  EXPECT_THROW(sgp::gf::field_ctx(0), sgp::DomainError);
  EXPECT_THROW(sgp::gf::field_ctx(17), sgp::DomainError);
  EXPECT_THROW(sgp::gf::field_of_size(12), sgp::DomainError);
}

TEST(Field, ZechArithmeticMatchesPolynomialBasis) {
  for (unsigned e : {1u, 2u, 3u, 4u, 6u}) {
    auto f = sgp::gf::field_ctx(e);
    const auto els = all_elements(*f);
    for (auto a : els)
      for (auto b : els) {
        const auto pa = f->to_poly(a), pb = f->to_poly(b);
        EXPECT_EQ(f->to_poly(f->add(a, b)), pa ^ pb);
        EXPECT_EQ(f->to_poly(f->mul(a, b)), clmul_mod(pa, pb, f->modulus(), e));
      }
  }
}

TEST(Field, GammaIsPrimitive) {
  for (unsigned e = 2; e <= 16; ++e) {
    auto f = sgp::gf::field_ctx(e);
    EXPECT_EQ(f->element_order(f->gamma()), f->order() - 1) << e;
    EXPECT_EQ(f->to_poly(f->gamma()), 2u);
  }
}

TEST(Field, ModuliAreCompatibleAcrossSubfields) {
  for (unsigned e = 2; e <= 16; ++e)
    for (unsigned d = 1; d < e; ++d) {
      if (e % d) continue;
      auto big = sgp::gf::field_ctx(e);
      auto small = sgp::gf::field_ctx(d);
      const FieldElem root = sgp::gf::subfield_embed(*small, *big, small->gamma());
      const std::uint32_t poly = small->modulus();
      FieldElem value = FieldElem::zero();
      for (unsigned i = 0; i <= d; ++i)
        if (poly >> i & 1) value = big->add(value, big->pow(root, i));
      EXPECT_TRUE(value.is_zero()) << "degree " << d << " inside " << e;
    }
}

TEST(Field, SubfieldEmbedIsAHomomorphism) {
  auto big = sgp::gf::field_ctx(8);
  auto small = sgp::gf::field_ctx(4);
  for (auto a : all_elements(*small))
    for (auto b : all_elements(*small)) {
      const auto ea = sgp::gf::subfield_embed(*small, *big, a), eb = sgp::gf::subfield_embed(*small, *big, b);
      EXPECT_EQ(sgp::gf::subfield_embed(*small, *big, small->add(a, b)), big->add(ea, eb));
      EXPECT_EQ(sgp::gf::subfield_embed(*small, *big, small->mul(a, b)), big->mul(ea, eb));
      EXPECT_EQ(sgp::gf::subfield_restrict(*small, *big, ea), a);
    }
  EXPECT_THROW(sgp::gf::subfield_restrict(*small, *big, big->gamma()), sgp::DomainError);
  EXPECT_THROW(sgp::gf::subfield_embed(*sgp::gf::field_ctx(3), *big, FieldElem::from_log(1)), sgp::DomainError);
}

TEST(Field, FrobeniusIsSquaring) {
  auto f = sgp::gf::field_ctx(5);
  for (auto a : all_elements(*f)) {
    EXPECT_EQ(f->frobenius(a, 1), f->mul(a, a));
    EXPECT_EQ(f->frobenius(a, 5), a);
    EXPECT_EQ(f->frobenius(a, -1), f->frobenius(a, 4));
  }
}

TEST(Field, InverseAndPowers) {
  auto f = sgp::gf::field_ctx(7);
  for (auto a : all_elements(*f)) {
    if (a.is_zero()) {
      EXPECT_THROW(f->inv(a), sgp::DomainError);
      EXPECT_TRUE(f->pow(a, 3).is_zero());
      EXPECT_THROW(f->pow(a, -1), sgp::DomainError);
      continue;
    }
    EXPECT_EQ(f->mul(a, f->inv(a)), f->one());
    EXPECT_EQ(f->pow(a, -3), f->inv(f->pow(a, 3)));
    EXPECT_EQ(f->pow(a, 0), f->one());
  }
  EXPECT_EQ(sgp::gf::f_arith(*f, f->gamma(), f->gamma(), sgp::gf::ArithKind::add), FieldElem::zero());
}

TEST(Field, CharacterEmbeddingIsMultiplicative) {
  auto f = sgp::gf::field_ctx(4);
  for (std::int64_t i = 0; i < 15; ++i)
    for (std::int64_t j = 0; j < 15; ++j) {
      const auto a = f->gamma_pow(i), b = f->gamma_pow(j);
      EXPECT_EQ(sgp::gf::char_embed(*f, f->mul(a, b)), sgp::gf::char_embed(*f, a) * sgp::gf::char_embed(*f, b));
    }
  EXPECT_EQ(sgp::gf::char_embed(*f, f->one()), sgp::exact::Cyclo(1));
  EXPECT_THROW(sgp::gf::char_embed(*f, FieldElem::zero()), sgp::DomainError);
}

TEST(Field, PolyRoundTrip) {
  auto f = sgp::gf::field_ctx(9);
  for (std::uint32_t bits = 0; bits < f->order(); ++bits) EXPECT_EQ(f->to_poly(f->from_poly(bits)), bits);
  EXPECT_THROW(f->from_poly(f->order()), sgp::DomainError);
  EXPECT_EQ(sgp::gf::log2_exact(1024), 10u);
  EXPECT_EQ(sgp::gf::log2_exact(6), 0u);
}

}  // namespace
