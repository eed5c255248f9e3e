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

#include "sgp/exact/rat.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "sgp/error.hpp"

namespace sgp::exact {
namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

bool fits(const mpz_class& z) { return z.fits_slong_p() && z != kMin; }

}  // namespace

Rat::Rat(std::int64_t n) {
  if (n == kMin) {
    assign_big(mpq_class(mpz_class(static_cast<long>(n))));
  } else {
    num_ = n;
  }
}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("Rat: zero denominator");
  if (num == kMin || den == kMin) {
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    assign_big(q);
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(abs64(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rat::Rat(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign_big(c);
}

void Rat::assign_big(const mpq_class& q) {
  if (fits(q.get_num()) && fits(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(q);
  }
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw DomainError("Rat: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw DomainError("Rat: zero denominator");
  q.canonicalize();
  return Rat(q);
}

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rat::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }

mpz_class Rat::denominator() const {
  return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_));
}

std::optional<std::int64_t> Rat::to_int64() const {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

double Rat::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rat::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator-() const {
  Rat r;
  if (big_) {
    r.assign_big(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != kMin) {
        num_ = s;
        return *this;
      }
    } else {
      std::int64_t g = std::gcd(den_, o.den_);
      std::int64_t a, b, n, d;
      if (!__builtin_mul_overflow(num_, o.den_ / g, &a) && !__builtin_mul_overflow(o.num_, den_ / g, &b) &&
          !__builtin_add_overflow(a, b, &n) && !__builtin_mul_overflow(den_, o.den_ / g, &d) && n != kMin) {
        std::int64_t h = std::gcd(abs64(n), d);
        if (n == 0) {
          num_ = 0;
          den_ = 1;
        } else {
          num_ = n / h;
          den_ = d / h;
        }
        return *this;
      }
    }
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = std::gcd(abs64(num_), o.den_);
    std::int64_t g2 = std::gcd(abs64(o.num_), den_);
    std::int64_t n, d;
    if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &n) && !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &d) &&
        n != kMin) {
      num_ = n;
      den_ = d;
      return *this;
    }
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("Rat: division by zero");
  if (!o.big_) {
    // o.num_ != kMin by invariant, so the reciprocal is representable inline.
    Rat inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = abs64(o.num_);
    return *this *= inv;
  }
  assign_big(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  // Canonical storage: a value that fits is never held big.
  return false;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace sgp::exact
