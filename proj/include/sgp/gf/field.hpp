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

#ifndef SGP_GF_FIELD_HPP
#define SGP_GF_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sgp/exact/cyclo.hpp"

namespace sgp::gf {

/// Element of GF(2^e) stored as its discrete log to the fixed primitive
/// element gamma, or the distinguished ZERO marker.
class FieldElem {
 public:
  static constexpr std::uint32_t kZeroLog = 0xFFFFFFFFu;

  constexpr FieldElem() = default;  // ZERO
  static constexpr FieldElem zero() { return FieldElem(); }
  /// gamma^log; log must already be reduced modulo q - 1.
  static constexpr FieldElem from_log(std::uint32_t log) { return FieldElem(log); }

  constexpr bool is_zero() const { return log_ == kZeroLog; }
  constexpr std::uint32_t log() const { return log_; }

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

 private:
  constexpr explicit FieldElem(std::uint32_t log) : log_(log) {}
  std::uint32_t log_ = kZeroLog;
};

/// GF(2^e), 1 <= e <= 16, modulo the frozen Conway polynomial of degree e.
/// The class x of the indeterminate is the primitive element gamma.
/// Immutable after construction.
class FieldCtx {
 public:
  explicit FieldCtx(unsigned e);

  unsigned degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  /// Bit mask of the modulus, bit i = coefficient of x^i.
  std::uint32_t modulus() const { return modulus_; }

  FieldElem one() const { return FieldElem::from_log(0); }
  FieldElem gamma() const { return q_ == 2 ? one() : FieldElem::from_log(1); }
  FieldElem gamma_pow(std::int64_t k) const;

  FieldElem add(FieldElem a, FieldElem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::uint32_t d = b.log() >= a.log() ? b.log() - a.log() : b.log() + m_ - a.log();
    std::uint32_t z = zech_[d];
    if (z == FieldElem::kZeroLog) return FieldElem::zero();
    std::uint32_t s = a.log() + z;
    return FieldElem::from_log(s >= m_ ? s - m_ : s);
  }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a.is_zero() || b.is_zero()) return FieldElem::zero();
    std::uint32_t s = a.log() + b.log();
    return FieldElem::from_log(s >= m_ ? s - m_ : s);
  }
  /// Throws DomainError on ZERO.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::int64_t k) const;
  /// a^(2^f).
  FieldElem frobenius(FieldElem a, std::int64_t f) const;
  /// Multiplicative order of a nonzero element.
  std::uint32_t element_order(FieldElem a) const;

  /// Polynomial-basis image (bit mask) and its inverse.
  std::uint32_t to_poly(FieldElem a) const { return a.is_zero() ? 0 : exp_[a.log()]; }
  FieldElem from_poly(std::uint32_t bits) const;

  /// log(1 + gamma^n), or kZeroLog when gamma^n = 1.
  std::uint32_t zech(std::uint32_t n) const { return zech_[n]; }

  std::string element_string(FieldElem a) const;

 private:
  unsigned e_;
  std::uint32_t q_;
  std::uint32_t m_;  // q - 1
  std::uint32_t modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Shared context for GF(2^e); throws DomainError unless 1 <= e <= 16.
FieldPtr field_ctx(unsigned e);
/// Context for a field of size q = 2^e.
FieldPtr field_of_size(std::uint64_t q);
/// Frozen modulus for degree e (Conway polynomial, bit mask LSB = constant term).
std::uint32_t primitive_polynomial(unsigned e);
std::string polynomial_string(std::uint32_t mask);
/// e with q = 2^e, or 0 when q is not a power of two.
unsigned log2_exact(std::uint64_t q);

enum class ArithKind { add, mul, inv };
FieldElem f_arith(const FieldCtx& ctx, FieldElem a, FieldElem b, ArithKind kind);

/// gamma^k -> zeta_(q-1)^k.
exact::Cyclo char_embed(const FieldCtx& ctx, FieldElem a);

/// Image under the embedding gamma_small -> gamma_big^((Q-1)/(q-1)).
FieldElem subfield_embed(const FieldCtx& small, const FieldCtx& big, FieldElem a);
/// Inverse of subfield_embed on its image; throws DomainError outside it.
FieldElem subfield_restrict(const FieldCtx& small, const FieldCtx& big, FieldElem a);

inline FieldElem frobenius(const FieldCtx& ctx, FieldElem a, std::int64_t f) { return ctx.frobenius(a, f); }

}  // namespace sgp::gf

#endif  // SGP_GF_FIELD_HPP
