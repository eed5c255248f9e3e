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

#include <random>

#include "sgp/error.hpp"
#include "sgp/exact/cyclo.hpp"
#include "sgp/exact/rat.hpp"

namespace {

using sgp::exact::Cyclo;
using sgp::exact::CycloSum;
using sgp::exact::Rat;

TEST(Rat, NormalizesSignAndGcd) {
  EXPECT_EQ(Rat(6, -4), Rat(-3, 2));
  EXPECT_EQ(Rat(0, 7), Rat(0));
  EXPECT_EQ(Rat(6, -4).to_string(), "-3/2");
  EXPECT_THROW(Rat(1, 0), sgp::DomainError);
}

TEST(Rat, ArithmeticOracles) {
  EXPECT_EQ(Rat(1, 2) + Rat(1, 3), Rat(5, 6));
  EXPECT_EQ(Rat(1, 2) - Rat(1, 3), Rat(1, 6));
  EXPECT_EQ(Rat(2, 3) * Rat(9, 4), Rat(3, 2));
  EXPECT_EQ(Rat(2, 3) / Rat(4, 9), Rat(3, 2));
  EXPECT_THROW(Rat(1) / Rat(0), sgp::DomainError);
  EXPECT_LT(Rat(-1, 2), Rat(1, 3));
}

TEST(Rat, OverflowPromotesToBigAndBack) {
  const Rat big(std::int64_t{1} << 62);
  const Rat sq = big * big * big;
  EXPECT_FALSE(sq.to_int64().has_value());
  EXPECT_EQ(sq.to_string(), "98079714615416886934934209737619787751599303819750539264");
  EXPECT_EQ(sq / big / big, big);
  EXPECT_EQ((sq / big / big).to_int64(), std::int64_t{1} << 62);
  const Rat min(INT64_MIN);
  EXPECT_EQ((-min).to_string(), "9223372036854775808");
}

TEST(Rat, ParseRoundTrip) {
  for (const char* s : {"0", "-7", "22/7", "-1/3", "123456789012345678901234567890"})
    EXPECT_EQ(Rat::parse(s).to_string(), s);
  EXPECT_EQ(Rat::parse("4/6"), Rat(2, 3));
  EXPECT_THROW(Rat::parse("1/0"), sgp::DomainError);
  EXPECT_THROW(Rat::parse("x"), sgp::DomainError);
  EXPECT_THROW(Rat::parse(""), sgp::DomainError);
}

TEST(Rat, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000'000'000LL, 1'000'000'000'000LL);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000'000LL);
  for (int i = 0; i < 500; ++i) {
    const Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rat(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Cyclo, RootsOfUnityRelations) {
  const Cyclo w = Cyclo::root_of_unity(3, 1);
  EXPECT_EQ(Cyclo(1) + w + w * w, Cyclo(0));
  EXPECT_EQ(w * w * w, Cyclo(1));
  EXPECT_EQ(Cyclo::root_of_unity(4, 1) * Cyclo::root_of_unity(4, 1), Cyclo(-1));
  EXPECT_EQ(Cyclo::root_of_unity(2, 1), Cyclo(-1));
  EXPECT_EQ(Cyclo::root_of_unity(6, 1), -Cyclo::root_of_unity(3, 2));
  EXPECT_EQ(Cyclo::root_of_unity(5, 7), Cyclo::root_of_unity(5, 2));
  EXPECT_EQ(Cyclo::root_of_unity(5, -1), Cyclo::root_of_unity(5, 4));
}

TEST(Cyclo, OrderIsNeverTwoModFour) {
  for (std::uint32_t n = 1; n <= 60; ++n)
    for (std::int64_t k = 0; k < n; ++k) EXPECT_NE(Cyclo::root_of_unity(n, k).order() % 4, 2u) << n << " " << k;
}

std::int64_t mobius(std::uint32_t n) {
  std::int64_t m = 1;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  return n > 1 ? -m : m;
}

TEST(Cyclo, SumOfPrimitiveRootsIsMobius) {
  for (std::uint32_t n = 1; n <= 40; ++n) {
    Cyclo s;
    for (std::uint32_t k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) s += Cyclo::root_of_unity(n, k);
    EXPECT_EQ(s, Cyclo(mobius(n))) << n;
  }
}

TEST(Cyclo, RationalDetection) {
  const Cyclo a = Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(5, 4);
  EXPECT_FALSE(a.as_rational().has_value());
  EXPECT_EQ((a * a + a).as_rational(), Rat(1));
  EXPECT_EQ(Cyclo(Rat(3, 4)).as_rational(), Rat(3, 4));
}

TEST(Cyclo, GaloisAndConjugation) {
  const Cyclo z = Cyclo::root_of_unity(15, 2) + Cyclo(Rat(1, 2)) * Cyclo::root_of_unity(15, 7);
  EXPECT_EQ(z.galois(1), z);
  EXPECT_EQ(z.conjugate().conjugate(), z);
  EXPECT_EQ(z.galois(2).galois(8), z.galois(16));
  EXPECT_TRUE((z * z.conjugate()).to_complex().imag() < 1e-12);
  EXPECT_NEAR((z * z.conjugate()).to_complex().real(), std::norm(z.to_complex()), 1e-9);
}

TEST(Cyclo, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  const std::uint32_t orders[] = {1, 3, 4, 5, 8, 12, 15, 7, 21};
  std::uniform_int_distribution<int> pick(0, 8), coef(-3, 3), exps(0, 40);
  auto random_cyclo = [&] {
    Cyclo c;
    for (int t = 0; t < 3; ++t) c += Cyclo(coef(rng)) * Cyclo::root_of_unity(orders[pick(rng)], exps(rng));
    return c;
  };
  for (int i = 0; i < 200; ++i) {
    const Cyclo a = random_cyclo(), b = random_cyclo(), c = random_cyclo();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Cyclo(0));
    const auto za = a.to_complex(), zb = b.to_complex();
    EXPECT_NEAR(std::abs((a * b).to_complex() - za * zb), 0.0, 1e-8);
  }
}

TEST(Cyclo, KeysAgreeExactlyWhenEqual) {
  const Cyclo a = Cyclo::root_of_unity(3, 1);
  const Cyclo b = -Cyclo(1) - Cyclo::root_of_unity(3, 2);
  EXPECT_EQ(a.key_at(12), b.key_at(12));
  EXPECT_NE(a.key_at(12), Cyclo::root_of_unity(3, 2).key_at(12));
  EXPECT_THROW((void)a.key_at(4), sgp::DomainError);
}

TEST(CycloSum, MatchesRepeatedAddition) {
  CycloSum acc(60);
  Cyclo direct;
  for (int k = 0; k < 30; ++k) {
    const Cyclo a = Cyclo::root_of_unity(12, k) + Cyclo(k);
    const Cyclo b = Cyclo::root_of_unity(5, 2 * k);
    acc.add_product(a, b, Rat(k, 7));
    direct += Cyclo(Rat(k, 7)) * a * b;
    acc.add_root(k, Rat(1));
    direct += Cyclo::root_of_unity(60, k);
  }
  EXPECT_EQ(acc.result(), direct);
  CycloSum small(4);
  EXPECT_THROW(small.add(Cyclo::root_of_unity(3, 1)), sgp::DomainError);
}

TEST(CyclotomicPolynomial, Oracles) {
  EXPECT_EQ(sgp::exact::cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(sgp::exact::cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(sgp::exact::euler_phi(36), 12u);
  EXPECT_EQ(sgp::exact::lcm_order(6, 4), 12u);
  EXPECT_EQ(sgp::exact::ambient_order(6), 3u);
}

}  // namespace
