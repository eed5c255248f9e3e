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

#ifndef SGP_EXACT_CYCLO_HPP
#define SGP_EXACT_CYCLO_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgp/exact/rat.hpp"

namespace sgp::exact {

/// Exact element of a cyclotomic field Q(zeta_N).
///
/// Canonical form: coefficients with respect to the power basis
/// 1, zeta, ..., zeta^(phi(N)-1) after reduction modulo the N-th cyclotomic
/// polynomial. The stored order is never congruent to 2 mod 4 (Q(zeta_2m) =
/// Q(zeta_m) for odd m) and every rational value is stored at order 1.
/// Two values are equal iff their canonical forms agree after lifting both
/// to the lcm of their orders.
class Cyclo {
 public:
  struct Term {
    std::uint32_t exponent;
    Rat coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Cyclo() = default;
  Cyclo(const Rat& r);       // NOLINT(google-explicit-constructor)
  Cyclo(std::int64_t value);  // NOLINT(google-explicit-constructor)

  /// zeta_order^exponent.
  static Cyclo root_of_unity(std::uint32_t order, std::int64_t exponent);

  /// Builds sum coeff * zeta_order^exponent from arbitrary (unreduced) terms.
  static Cyclo from_terms(std::uint32_t order, std::span<const Term> terms);

  std::uint32_t order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The rational value when this element lies in Q.
  std::optional<Rat> as_rational() const;

  /// Image under zeta -> zeta^-1 (complex conjugation).
  Cyclo conjugate() const { return galois(-1); }
  /// Image under zeta_N -> zeta_N^k; k must be coprime to the order.
  Cyclo galois(std::int64_t k) const;

  /// Canonical terms of this value viewed in Q(zeta_order); order must be a
  /// multiple of order() and not congruent to 2 mod 4.
  std::vector<Term> terms_at(std::uint32_t order) const;
  /// Deterministic text key of the value written at the given order.
  std::string key_at(std::uint32_t order) const;

  /// Floating-point embedding zeta_N -> exp(2 pi i / N). Lossy.
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

 private:
  friend class CycloSum;
  // Reduces a dense group-ring vector of length n to canonical form.
  static Cyclo canonical(std::uint32_t n, std::vector<Rat> c);

  std::uint32_t order_ = 1;
  std::vector<Term> terms_;
};

Cyclo root_of_unity(std::uint32_t order, std::int64_t exponent);
inline Cyclo conjugate(const Cyclo& a) { return a.conjugate(); }
inline std::optional<Rat> as_rational(const Cyclo& a) { return a.as_rational(); }

/// Accumulates weighted sums and products of cyclotomic numbers in the group
/// ring Q[x]/(x^L - 1), reducing modulo the cyclotomic polynomial only once
/// when result() is called. Every added value must have an order dividing L.
class CycloSum {
 public:
  explicit CycloSum(std::uint32_t order);

  std::uint32_t order() const { return order_; }
  void add(const Cyclo& a, const Rat& weight = Rat(1));
  void add_product(const Cyclo& a, const Cyclo& b, const Rat& weight = Rat(1));
  void add_root(std::int64_t exponent, const Rat& weight = Rat(1));
  Cyclo result() const;

 private:
  std::uint32_t stride(const Cyclo& a) const;
  std::uint32_t order_;
  std::vector<Rat> acc_;
};

/// Least common multiple of two orders; throws DomainError past 2^32 - 1.
std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b);
/// Normalizes an ambient order so that it is not congruent to 2 mod 4.
std::uint32_t ambient_order(std::uint32_t n);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);
std::uint32_t euler_phi(std::uint32_t n);

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

}  // namespace sgp::exact

#endif  // SGP_EXACT_CYCLO_HPP
