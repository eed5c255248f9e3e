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

#include "sgp/chartab/modp.hpp"

#include <algorithm>
#include <cmath>

#include "sgp/error.hpp"

namespace sgp::chartab::modp {
namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, u64 p) {
  trim(a);
  const u64 lead_inv = invmod(m.back(), p);
  while (a.size() >= m.size()) {
    const u64 t = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = submod(a[shift + i], mulmod(t, m[i], p), p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, u64 k, const Poly& m, u64 p) {
  Poly r{1};
  r = poly_mod(r, m, p);
  base = poly_mod(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

Poly poly_div(Poly a, const Poly& m, u64 p) {
  trim(a);
  Poly q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
  const u64 lead_inv = invmod(m.back(), p);
  while (a.size() >= m.size()) {
    const u64 t = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    q[shift] = t;
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = submod(a[shift + i], mulmod(t, m[i], p), p);
    trim(a);
  }
  return q;
}

// f monic, squarefree, product of distinct linear factors.
void split_linear(const Poly& f, u64 p, std::vector<u64>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(submod(0, mulmod(f[0], invmod(f[1], p), p), p));
    return;
  }
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x) {
      u64 v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = addmod(mulmod(v, x, p), f[i], p);
      if (v == 0) out.push_back(x);
    }
    return;
  }
  for (u64 a = 0;; ++a) {
    Poly h = poly_powmod(Poly{a % p, 1}, (p - 1) / 2, f, p);
    h = poly_sub(std::move(h), Poly{1}, p);
    Poly g = poly_gcd(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      split_linear(g, p, out);
      split_linear(poly_div(f, g, p), p, out);
      return;
    }
  }
}

}  // namespace

u64 powmod(u64 a, u64 k, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (k > 0) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw CrossCheckError("inverse of zero modulo p");
  return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 choose_prime(u64 exponent, u64 order) {
  const u64 bound = static_cast<u64>(2.0 * std::sqrt(static_cast<double>(order))) + 1;
  for (u64 p = exponent + 1;; p += exponent)
    if (p > bound && is_prime(p)) return p;
}

u64 root_of_unity(u64 n, u64 p) {
  if ((p - 1) % n != 0) throw DomainError("root order does not divide p - 1");
  std::vector<u64> primes;
  u64 m = n;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) primes.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) primes.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    const u64 z = powmod(g, (p - 1) / n, p);
    if (std::all_of(primes.begin(), primes.end(), [&](u64 r) { return powmod(z, n / r, p) != 1; })) return z;
  }
  return 1;
}

Poly charpoly(Matrix h, u64 p) {
  const std::size_t n = h.size();
  // Upper Hessenberg form by elementary similarity transforms.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (auto& row : h) std::swap(row[piv], row[j + 1]);
    }
    const u64 inv = invmod(h[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      const u64 t = mulmod(h[i][j], inv, p);
      if (t == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[i][c] = submod(h[i][c], mulmod(t, h[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = addmod(h[r][j + 1], mulmod(t, h[r][i], p), p);
    }
  }
  std::vector<Poly> chain(n + 1);
  chain[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur(m + 1, 0);
    const Poly& prev = chain[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = addmod(cur[i + 1], prev[i], p);
      cur[i] = submod(cur[i], mulmod(h[m - 1][m - 1], prev[i], p), p);
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], p);
      const u64 t = mulmod(h[i][m - 1], prod, p);
      if (t == 0) continue;
      for (std::size_t c = 0; c < chain[i].size(); ++c) cur[c] = submod(cur[c], mulmod(t, chain[i][c], p), p);
    }
    chain[m] = std::move(cur);
  }
  return chain[n];
}

std::vector<u64> roots(const Poly& f0, u64 p) {
  Poly f = f0;
  trim(f);
  if (f.size() <= 1) return {};
  const u64 inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  // Product of the distinct linear factors: gcd(f, x^p - x).
  Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
  Poly g = poly_gcd(f, poly_sub(std::move(xp), Poly{0, 1}, p), p);
  std::vector<u64> out;
  split_linear(g, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> rref(Matrix& m, u64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const u64 inv = invmod(m[r][c], p);
    for (auto& x : m[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 t = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = submod(m[i][j], mulmod(t, m[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

Matrix nullspace(const Matrix& a, u64 p) {
  Matrix m = a;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = submod(0, m[r][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sgp::chartab::modp
