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

#include "sgp/chartab/dixon.hpp"

#include <algorithm>
#include <numeric>

#include "sgp/chartab/modp.hpp"
#include "sgp/error.hpp"

namespace sgp::chartab {

using exact::Cyclo;
using exact::Rat;
using modp::Matrix;
using modp::u64;

namespace {

constexpr std::size_t kMaxClasses = 200;

// M[i][k] = #{x in C_j : x^-1 g_k in C_i}; columns indexed by target class.
Matrix class_matrix(const ClassSpace& s, const std::vector<std::vector<std::uint32_t>>& members, std::size_t j,
                    u64 p, const groups::Limits& limits) {
  const std::size_t k = s.class_count();
  const auto& g = s.group();
  std::vector<std::vector<u64>> m(k, std::vector<u64>(k, 0));
  std::size_t step = 0;
  for (std::uint32_t xi : members[j]) {
    if ((++step & 0x3FF) == 0) limits.check_time("class matrix");
    const groups::Code xinv = g.inverse(g.element(xi));
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint32_t c = s.classes().class_of[g.require_index(g.multiply(xinv, s.rep(t)))];
      ++m[c][t];
    }
  }
  for (auto& row : m)
    for (auto& v : row) v %= p;
  return m;
}

std::vector<u64> apply(const Matrix& m, const std::vector<u64>& v, u64 p) {
  std::vector<u64> r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[t] != 0 && m[i][t] != 0) r[i] = modp::addmod(r[i], modp::mulmod(m[i][t], v[t], p), p);
  return r;
}

// Splits an invariant subspace (basis in RREF) into eigenspaces of m.
std::vector<Matrix> split(const Matrix& basis, const Matrix& m, u64 p) {
  Matrix b = basis;
  const auto pivots = modp::rref(b, p);
  const std::size_t d = b.size();
  Matrix images;
  for (const auto& row : b) images.push_back(apply(m, row, p));
  // Restricted operator in the basis: coordinates are the pivot entries.
  Matrix a(d, std::vector<u64>(d, 0));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) a[r][c] = images[c][pivots[r]];
  const auto lambdas = modp::roots(modp::charpoly(a, p), p);
  if (lambdas.size() <= 1) return {b};
  std::vector<Matrix> out;
  std::size_t total = 0;
  for (u64 lambda : lambdas) {
    Matrix shifted = a;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = modp::submod(shifted[i][i], lambda, p);
    Matrix coords = modp::nullspace(shifted, p);
    Matrix sub;
    for (const auto& c : coords) {
      std::vector<u64> v(b[0].size(), 0);
      for (std::size_t r = 0; r < d; ++r)
        if (c[r] != 0)
          for (std::size_t t = 0; t < v.size(); ++t) v[t] = modp::addmod(v[t], modp::mulmod(c[r], b[r][t], p), p);
      sub.push_back(std::move(v));
    }
    modp::rref(sub, p);
    total += sub.size();
    out.push_back(std::move(sub));
  }
  if (total != d) throw CrossCheckError("class matrix is not diagonalizable modulo p");
  return out;
}

struct RowKey {
  Rat degree;
  std::vector<std::string> keys;
};

}  // namespace

CharTable dixon_schneider(const SpacePtr& space, const groups::Limits& limits, DixonStats* stats) {
  const ClassSpace& s = *space;
  const std::size_t k = s.class_count();
  if (k > kMaxClasses)
    throw ResourceError(s.label() + " has " + std::to_string(k) + " classes; the table bound is " +
                        std::to_string(kMaxClasses));
  const u64 order = s.order();
  const u64 e = s.exponent();
  const u64 p = modp::choose_prime(e, order);
  if (p >= (u64{1} << 62)) throw ResourceError("prime for " + s.label() + " is too large");
  const auto members = s.classes().members();

  std::vector<std::size_t> sequence(k);
  std::iota(sequence.begin(), sequence.end(), 0);
  std::stable_sort(sequence.begin(), sequence.end(),
                   [&](std::size_t a, std::size_t b) { return s.class_size(a) < s.class_size(b); });

  Matrix whole(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) whole[i][i] = 1;
  std::vector<Matrix> pending;
  std::vector<std::vector<u64>> lines;
  if (k == 1) lines.push_back(whole[0]);
  else pending.push_back(whole);
  std::size_t used = 0;
  for (std::size_t j : sequence) {
    if (pending.empty()) break;
    if (j == 0) continue;
    limits.check_time("character table");
    const Matrix m = class_matrix(s, members, j, p, limits);
    ++used;
    std::vector<Matrix> next;
    for (const auto& sub : pending) {
      for (auto& piece : split(sub, m, p)) {
        if (piece.size() == 1) lines.push_back(piece[0]);
        else next.push_back(std::move(piece));
      }
    }
    pending = std::move(next);
  }
  if (!pending.empty()) throw CrossCheckError("eigenspaces of " + s.label() + " did not split completely");
  if (lines.size() != k) throw CrossCheckError("wrong number of eigenvectors");
  if (stats != nullptr) *stats = {p, used};

  const u64 z = modp::root_of_unity(e, p);
  // Power maps of the representatives.
  std::vector<std::vector<std::uint32_t>> powers(k);
  for (std::size_t i = 0; i < k; ++i) {
    const u64 n = s.classes().rep_orders[i];
    for (u64 l = 0; l < n; ++l) powers[i].push_back(s.power_class(i, l));
  }

  CharTable table{space, {}};
  for (auto w : lines) {
    const u64 inv0 = modp::invmod(w[0], p);
    for (auto& x : w) x = modp::mulmod(x, inv0, p);
    u64 sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const u64 term = modp::mulmod(w[i], w[s.classes().inverse_class[i]], p);
      sum = modp::addmod(sum, modp::mulmod(term, modp::invmod(s.class_size(i) % p, p), p), p);
    }
    const u64 d2 = modp::mulmod(order % p, modp::invmod(sum, p), p);
    u64 degree = 0;
    for (u64 d = 1; d * d <= order; ++d)
      if (modp::mulmod(d, d, p) == d2 && order % d == 0) {
        degree = d;
        break;
      }
    if (degree == 0) throw CrossCheckError("no degree matches an eigenvector of " + s.label());
    std::vector<u64> chi(k);
    for (std::size_t i = 0; i < k; ++i)
      chi[i] = modp::mulmod(modp::mulmod(w[i], degree % p, p), modp::invmod(s.class_size(i) % p, p), p);
    Character c{space, std::vector<Cyclo>(k), ""};
    for (std::size_t i = 0; i < k; ++i) {
      const u64 n = s.classes().rep_orders[i];
      const u64 zn = modp::powmod(z, e / n, p);
      const u64 ninv = modp::invmod(n % p, p);
      std::vector<Cyclo::Term> terms;
      u64 total = 0;
      for (u64 t = 0; t < n; ++t) {
        // Multiplicity of the eigenvalue zeta_n^t.
        u64 acc = 0;
        const u64 step = modp::powmod(zn, (n - t) % n, p);
        u64 root = 1;
        for (u64 l = 0; l < n; ++l) {
          acc = modp::addmod(acc, modp::mulmod(chi[powers[i][l]], root, p), p);
          root = modp::mulmod(root, step, p);
        }
        const u64 mult = modp::mulmod(acc, ninv, p);
        if (mult > degree) throw CrossCheckError("eigenvalue multiplicity out of range while lifting");
        total += mult;
        if (mult != 0) terms.push_back({static_cast<std::uint32_t>(t), Rat(static_cast<std::int64_t>(mult))});
      }
      if (total != degree) throw CrossCheckError("eigenvalue multiplicities do not sum to the degree");
      c.values[i] = Cyclo::from_terms(static_cast<std::uint32_t>(n), terms);
    }
    table.irreducibles.push_back(std::move(c));
  }

  std::uint32_t n = 1;
  for (const auto& c : table.irreducibles)
    for (const auto& v : c.values) n = exact::lcm_order(n, v.order());
  const Character trivial = trivial_character(space);
  std::vector<RowKey> keys;
  std::vector<bool> nontrivial;
  for (const auto& c : table.irreducibles) {
    nontrivial.push_back(!(c == trivial));
    RowKey rk{c.degree(), {}};
    for (const auto& v : c.values) rk.keys.push_back(v.key_at(n));
    keys.push_back(std::move(rk));
  }
  std::vector<std::size_t> order_idx(k);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].degree != keys[b].degree) return keys[a].degree < keys[b].degree;
    if (nontrivial[a] != nontrivial[b]) return static_cast<bool>(nontrivial[b]);
    return keys[a].keys < keys[b].keys;
  });
  CharTable sorted{space, {}};
  for (std::size_t idx = 0; idx < k; ++idx) {
    sorted.irreducibles.push_back(std::move(table.irreducibles[order_idx[idx]]));
    sorted.irreducibles.back().label = "X." + std::to_string(idx + 1);
  }
  return sorted;
}

}  // namespace sgp::chartab
