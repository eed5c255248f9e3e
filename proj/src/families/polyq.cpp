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

#include "sgp/families/polyq.hpp"

#include <sstream>

namespace sgp::families {

PolyQ::PolyQ(const Rat& c) { set(0, c); }
PolyQ::PolyQ(std::int64_t c) { set(0, Rat(c)); }

PolyQ PolyQ::var() { return monomial(Rat(1), 1); }

PolyQ PolyQ::monomial(const Rat& c, unsigned exponent) {
  PolyQ p;
  p.set(exponent, c);
  return p;
}

void PolyQ::set(unsigned exponent, const Rat& c) {
  if (c.is_zero()) coeffs_.erase(exponent);
  else coeffs_[exponent] = c;
}

Rat PolyQ::coefficient(unsigned exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat PolyQ::operator()(const Rat& x) const {
  Rat acc(0);
  for (unsigned e = degree() + 1; e-- > 0;) acc = acc * x + coefficient(e);
  return acc;
}

PolyQ PolyQ::compose(const PolyQ& inner) const {
  PolyQ acc;
  for (unsigned e = degree() + 1; e-- > 0;) acc = acc * inner + PolyQ(coefficient(e));
  return acc;
}

PolyQ PolyQ::shifted(const Rat& a) const { return compose(var() + PolyQ(a)); }

PolyQ PolyQ::pow(unsigned k) const {
  PolyQ r(1), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

bool PolyQ::all_coefficients_nonnegative() const {
  for (const auto& [e, c] : coeffs_)
    if (c.sign() < 0) return false;
  return true;
}

std::string PolyQ::to_string(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) os << (c.sign() < 0 ? "-" : "");
    else os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const bool unit = mag == Rat(1);
    if (e == 0 || !unit) os << mag;
    if (e > 0) {
      if (!unit) os << "*";
      os << variable;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

nlohmann::json PolyQ::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : coeffs_) j[std::to_string(e)] = c.to_string();
  return j;
}

PolyQ PolyQ::operator-() const {
  PolyQ r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) + c);
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) - c);
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  PolyQ r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coefficient(e1 + e2) + c1 * c2);
  return *this = r;
}

}  // namespace sgp::families
