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

#include "sgp/gf/field.hpp"

#include <array>
#include <mutex>
#include <numeric>

#include "sgp/error.hpp"

namespace sgp::gf {
namespace {

// Conway polynomials over GF(2). Compatible across subfields, so
// gamma_big^((2^n-1)/(2^d-1)) is a root of the degree-d entry whenever d | n.
constexpr std::array<std::uint32_t, 17> kConway = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x5B,   0x83,   0x11D,
    0x211,   0x46F,  0x805,  0x10EB, 0x201B, 0x40A9, 0x8035, 0x1002D,
};

std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned e) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> e & 1) a ^= modulus;
  }
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::uint32_t primitive_polynomial(unsigned e) {
  if (e < 1 || e > 16) throw DomainError("field degree must lie in [1, 16], got " + std::to_string(e));
  return kConway[e];
}

std::string polynomial_string(std::uint32_t mask) {
  std::string s;
  for (int i = 31; i >= 0; --i) {
    if (!(mask >> i & 1)) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) s += "1";
    else if (i == 1) s += "x";
    else s += "x^" + std::to_string(i);
  }
  return s;
}

unsigned log2_exact(std::uint64_t q) {
  if (q < 2 || (q & (q - 1))) return 0;
  return static_cast<unsigned>(__builtin_ctzll(q));
}

FieldCtx::FieldCtx(unsigned e) : e_(e), q_(1u << e), m_(q_ - 1), modulus_(primitive_polynomial(e)) {
  exp_.resize(m_);
  log_.assign(q_, FieldElem::kZeroLog);
  // With modulus x + 1 the class of x is 1, which generates GF(2)^x.
  std::uint32_t x = e == 1 ? 1 : 2;
  std::uint32_t v = 1;
  for (std::uint32_t k = 0; k < m_; ++k) {
    if (log_[v] != FieldElem::kZeroLog) throw CrossCheckError("modulus is not primitive for degree " + std::to_string(e));
    exp_[k] = v;
    log_[v] = k;
    v = poly_mulmod(v, x, modulus_, e);
  }
  if (v != 1) throw CrossCheckError("modulus is not primitive for degree " + std::to_string(e));
  zech_.resize(m_);
  for (std::uint32_t n = 0; n < m_; ++n) {
    std::uint32_t s = exp_[n] ^ 1u;
    zech_[n] = s == 0 ? FieldElem::kZeroLog : log_[s];
  }
}

FieldElem FieldCtx::gamma_pow(std::int64_t k) const { return FieldElem::from_log(static_cast<std::uint32_t>(mod(k, m_))); }

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.is_zero()) throw DomainError("inversion of ZERO in GF(" + std::to_string(q_) + ")");
  return FieldElem::from_log(a.log() == 0 ? 0 : m_ - a.log());
}

FieldElem FieldCtx::pow(FieldElem a, std::int64_t k) const {
  if (a.is_zero()) {
    if (k < 0) throw DomainError("negative power of ZERO");
    return k == 0 ? one() : a;
  }
  return FieldElem::from_log(static_cast<std::uint32_t>(mod(static_cast<std::int64_t>(a.log()) * mod(k, m_), m_)));
}

FieldElem FieldCtx::frobenius(FieldElem a, std::int64_t f) const {
  if (a.is_zero()) return a;
  std::int64_t p = 1;
  for (std::int64_t i = 0, n = mod(f, e_); i < n; ++i) p = p * 2 % m_;
  if (m_ == 1) p = 0;
  return FieldElem::from_log(static_cast<std::uint32_t>(static_cast<std::int64_t>(a.log()) * p % m_));
}

std::uint32_t FieldCtx::element_order(FieldElem a) const {
  if (a.is_zero()) throw DomainError("ZERO has no multiplicative order");
  return m_ / std::gcd(m_, a.log());
}

FieldElem FieldCtx::from_poly(std::uint32_t bits) const {
  if (bits >= q_) throw DomainError("polynomial outside field");
  return bits == 0 ? FieldElem::zero() : FieldElem::from_log(log_[bits]);
}

std::string FieldCtx::element_string(FieldElem a) const {
  if (a.is_zero()) return "0";
  if (a.log() == 0) return "1";
  return "g^" + std::to_string(a.log());
}

FieldPtr field_ctx(unsigned e) {
  primitive_polynomial(e);
  static std::mutex mu;
  static std::array<FieldPtr, 17> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[e]) cache[e] = std::make_shared<const FieldCtx>(e);
  return cache[e];
}

FieldPtr field_of_size(std::uint64_t q) {
  unsigned e = log2_exact(q);
  if (e == 0) throw DomainError("field size must be a power of two, got " + std::to_string(q));
  return field_ctx(e);
}

FieldElem f_arith(const FieldCtx& ctx, FieldElem a, FieldElem b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return ctx.add(a, b);
    case ArithKind::mul:
      return ctx.mul(a, b);
    case ArithKind::inv:
      return ctx.inv(a);
  }
  throw DomainError("unknown arithmetic kind");
}

exact::Cyclo char_embed(const FieldCtx& ctx, FieldElem a) {
  if (a.is_zero()) throw DomainError("char_embed: ZERO has no image");
  return exact::root_of_unity(ctx.order() - 1, a.log());
}

FieldElem subfield_embed(const FieldCtx& small, const FieldCtx& big, FieldElem a) {
  if (big.degree() % small.degree() != 0)
    throw DomainError("subfield_embed: degree " + std::to_string(small.degree()) + " does not divide " +
                      std::to_string(big.degree()));
  if (a.is_zero()) return a;
  const std::uint64_t step = (big.order() - 1) / (small.order() - 1);
  return FieldElem::from_log(static_cast<std::uint32_t>(a.log() * step % (big.order() - 1)));
}

FieldElem subfield_restrict(const FieldCtx& small, const FieldCtx& big, FieldElem a) {
  if (big.degree() % small.degree() != 0) throw DomainError("subfield_restrict: degrees do not divide");
  if (a.is_zero()) return a;
  const std::uint32_t step = (big.order() - 1) / (small.order() - 1);
  if (a.log() % step != 0) throw DomainError("subfield_restrict: element not in the subfield");
  return FieldElem::from_log(a.log() / step);
}

}  // namespace sgp::gf
