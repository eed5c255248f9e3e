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

#ifndef SGP_FAMILIES_POLYQ_HPP
#define SGP_FAMILIES_POLYQ_HPP

#include <map>
#include <string>

#include "json.hpp"
#include "sgp/exact/rat.hpp"

namespace sgp::families {

using exact::Rat;

/// Polynomial in one indeterminate with rational coefficients. Zero
/// coefficients are never stored.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(const Rat& c);        // NOLINT(google-explicit-constructor)
  PolyQ(std::int64_t c);      // NOLINT(google-explicit-constructor)
  static PolyQ var();
  static PolyQ monomial(const Rat& c, unsigned exponent);

  const std::map<unsigned, Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(unsigned exponent) const;
  bool is_zero() const { return coeffs_.empty(); }
  unsigned degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  Rat operator()(const Rat& x) const;
  /// this(inner(x)).
  PolyQ compose(const PolyQ& inner) const;
  /// this(x + a).
  PolyQ shifted(const Rat& a) const;
  PolyQ pow(unsigned k) const;
  bool all_coefficients_nonnegative() const;

  std::string to_string(const std::string& variable = "q") const;
  /// {"exponent": "coefficient"} with exact rationals as strings.
  nlohmann::json to_json() const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend bool operator==(const PolyQ&, const PolyQ&) = default;

 private:
  void set(unsigned exponent, const Rat& c);
  std::map<unsigned, Rat> coeffs_;
};

}  // namespace sgp::families

#endif  // SGP_FAMILIES_POLYQ_HPP
