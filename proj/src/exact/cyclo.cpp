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

#include "sgp/exact/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "sgp/error.hpp"

namespace sgp::exact {
namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> ps;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

int moebius(std::uint32_t n) {
  int mu = 1;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<std::int64_t> compute_cyclotomic(std::uint32_t n) {
  // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d); multiply first so every division is exact.
  std::vector<std::uint32_t> ups, downs;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = moebius(n / d);
    if (mu == 1) ups.push_back(d);
    if (mu == -1) downs.push_back(d);
  }
  std::vector<std::int64_t> p{1};
  for (std::uint32_t d : ups) {
    std::vector<std::int64_t> r(p.size() + d, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i + d] += p[i];
      r[i] -= p[i];
    }
    p = std::move(r);
  }
  for (std::uint32_t d : downs) {
    // p = (x^d - 1) * r  =>  r[i] = r[i - d] - p[i]
    std::vector<std::int64_t> r(p.size() - d, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t prev = i >= d ? r[i - d] : 0;
      if (__builtin_sub_overflow(prev, p[i], &r[i])) throw DomainError("cyclotomic polynomial coefficient overflow");
    }
    p = std::move(r);
  }
  return p;
}

// Reduces a dense group-ring vector of length n (n not 2 mod 4) modulo Phi_n
// and returns the nonzero canonical terms.
std::vector<Cyclo::Term> reduce_dense(std::uint32_t n, std::vector<Rat>& c) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::pair<std::size_t, std::int64_t>> nz;
  for (std::size_t j = 0; j < deg; ++j)
    if (phi[j] != 0) nz.emplace_back(j, phi[j]);
  for (std::size_t i = n; i-- > deg;) {
    if (c[i].is_zero()) continue;
    const Rat t = c[i];
    for (const auto& [j, v] : nz) c[i - deg + j] -= t * Rat(v);
    c[i] = Rat();
  }
  std::vector<Cyclo::Term> out;
  for (std::size_t i = 0; i < deg && i < c.size(); ++i)
    if (!c[i].is_zero()) out.push_back({static_cast<std::uint32_t>(i), c[i]});
  return out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint64_t r = n;
  for (std::uint32_t p : prime_factors(n)) r = r / p * (p - 1);
  return static_cast<std::uint32_t>(r);
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw DomainError("cyclotomic_polynomial: order must be positive");
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<const std::vector<std::int64_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<const std::vector<std::int64_t>>(compute_cyclotomic(n))).first;
  return *it->second;
}

std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b) {
  std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  if (l > 0xFFFFFFFFull) throw DomainError("cyclotomic order exceeds 2^32-1");
  return static_cast<std::uint32_t>(l);
}

std::uint32_t ambient_order(std::uint32_t n) { return n % 4 == 2 ? n / 2 : n; }

Cyclo::Cyclo(const Rat& r) {
  if (!r.is_zero()) terms_.push_back({0, r});
}

Cyclo::Cyclo(std::int64_t value) : Cyclo(Rat(value)) {}

Cyclo Cyclo::root_of_unity(std::uint32_t order, std::int64_t exponent) {
  if (order == 0) throw DomainError("root_of_unity: order must be positive");
  CycloSum s(order);
  s.add_root(exponent);
  return s.result();
}

Cyclo root_of_unity(std::uint32_t order, std::int64_t exponent) { return Cyclo::root_of_unity(order, exponent); }

Cyclo Cyclo::from_terms(std::uint32_t order, std::span<const Term> terms) {
  if (order == 0) throw DomainError("Cyclo::from_terms: order must be positive");
  CycloSum s(order);
  for (const auto& t : terms) s.add_root(t.exponent, t.coeff);
  return s.result();
}

std::optional<Rat> Cyclo::as_rational() const {
  if (order_ != 1) return std::nullopt;
  if (terms_.empty()) return Rat();
  return terms_.front().coeff;
}

Cyclo Cyclo::galois(std::int64_t k) const {
  if (order_ == 1) return *this;
  if (std::gcd<std::int64_t>(mod(k, order_), order_) != 1)
    throw DomainError("Cyclo::galois: exponent not coprime to order");
  CycloSum s(order_);
  for (const auto& t : terms_) s.add_root(static_cast<std::int64_t>(t.exponent) * mod(k, order_), t.coeff);
  return s.result();
}

std::vector<Cyclo::Term> Cyclo::terms_at(std::uint32_t order) const {
  if (order == order_) return terms_;
  if (order % order_ != 0 || order % 4 == 2) throw DomainError("Cyclo::terms_at: incompatible order");
  if (order_ == 1) return terms_;
  std::vector<Rat> dense(order);
  const std::uint32_t stride = order / order_;
  for (const auto& t : terms_) dense[static_cast<std::size_t>(t.exponent) * stride] += t.coeff;
  return reduce_dense(order, dense);
}

std::string Cyclo::key_at(std::uint32_t order) const {
  std::string out;
  for (const auto& t : terms_at(order)) {
    out += std::to_string(t.exponent);
    out += ':';
    out += t.coeff.to_string();
    out += ';';
  }
  return out;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> z = 0;
  for (const auto& t : terms_) {
    double a = 2.0 * std::numbers::pi * t.exponent / order_;
    z += t.coeff.to_double() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return z;
}

std::string Cyclo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coeff;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    if (c.sign() < 0) c = -c;
    first = false;
    if (t.exponent == 0) {
      os << c;
      continue;
    }
    if (c != Rat(1)) os << c << "*";
    os << "E(" << order_ << ")";
    if (t.exponent != 1) os << "^" << t.exponent;
  }
  return os.str();
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  CycloSum s(lcm_order(a.order_, b.order_));
  s.add(a);
  s.add(b);
  return s.result();
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.is_zero() || b.is_zero()) return Cyclo();
  if (a.order_ == 1 && b.order_ == 1) return Cyclo(a.terms_[0].coeff * b.terms_[0].coeff);
  if (a.order_ == 1 || b.order_ == 1) {
    const Cyclo& r = a.order_ == 1 ? a : b;
    Cyclo out = a.order_ == 1 ? b : a;
    for (auto& t : out.terms_) t.coeff *= r.terms_[0].coeff;
    return out;
  }
  CycloSum s(lcm_order(a.order_, b.order_));
  s.add_product(a, b);
  return s.result();
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  if (a.order_ == 1 || b.order_ == 1) return false;  // rational values always live at order 1
  std::uint32_t l = lcm_order(a.order_, b.order_);
  return a.terms_at(l) == b.terms_at(l);
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.to_string(); }

CycloSum::CycloSum(std::uint32_t order) : order_(order), acc_(order) {
  if (order == 0) throw DomainError("CycloSum: order must be positive");
}

std::uint32_t CycloSum::stride(const Cyclo& a) const {
  if (order_ % a.order() != 0) throw DomainError("CycloSum: value order does not divide accumulator order");
  return order_ / a.order();
}

void CycloSum::add(const Cyclo& a, const Rat& weight) {
  if (weight.is_zero()) return;
  const std::uint64_t s = stride(a);
  for (const auto& t : a.terms()) acc_[(t.exponent * s) % order_] += weight * t.coeff;
}

void CycloSum::add_product(const Cyclo& a, const Cyclo& b, const Rat& weight) {
  if (weight.is_zero()) return;
  const std::uint64_t sa = stride(a), sb = stride(b);
  for (const auto& ta : a.terms()) {
    const Rat wa = weight * ta.coeff;
    const std::uint64_t ea = ta.exponent * sa;
    for (const auto& tb : b.terms()) acc_[(ea + tb.exponent * sb) % order_] += wa * tb.coeff;
  }
}

void CycloSum::add_root(std::int64_t exponent, const Rat& weight) {
  acc_[static_cast<std::size_t>(mod(exponent, order_))] += weight;
}

Cyclo CycloSum::result() const { return Cyclo::canonical(order_, acc_); }

Cyclo Cyclo::canonical(std::uint32_t n, std::vector<Rat> c) {
  if (n % 4 == 2) {
    // zeta_n^k = (-1)^k zeta_m^(k(m+1)/2) with m = n/2 odd.
    const std::uint32_t m = n / 2;
    const std::uint64_t h = (m + 1) / 2;
    std::vector<Rat> d(m);
    for (std::uint64_t k = 0; k < n; ++k) {
      if (c[k].is_zero()) continue;
      Rat& slot = d[(k * h) % m];
      if (k % 2) slot -= c[k];
      else slot += c[k];
    }
    n = m;
    c = std::move(d);
  }
  Cyclo out;
  if (n == 1) {
    if (!c[0].is_zero()) out.terms_.push_back({0, c[0]});
    return out;
  }
  out.terms_ = reduce_dense(n, c);
  if (!out.terms_.empty() && !(out.terms_.size() == 1 && out.terms_[0].exponent == 0)) out.order_ = n;
  return out;
}

}  // namespace sgp::exact
