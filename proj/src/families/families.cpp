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

#include "sgp/families/families.hpp"

#include <algorithm>

#include "sgp/error.hpp"
#include "sgp/gf/field.hpp"
#include "sgp/groups/construct.hpp"

namespace sgp::families {

using chartab::CharTable;
using chartab::Character;
using chartab::SplitFuse;
using exact::Cyclo;

namespace {

const PolyQ kQ = PolyQ::var();

PolyQ half(const PolyQ& p) { return p * PolyQ(Rat(1, 2)); }

DegreeEntry entry(std::string label, PolyQ degree, PolyQ mult) {
  return {std::move(label), std::move(degree), std::move(mult)};
}

groups::Code embed_sl2(const groups::Model& model, const groups::Mat& m) {
  if (auto* mm = dynamic_cast<const groups::MatrixModel*>(&model); mm != nullptr && mm->dim() == 2)
    return mm->encode(m);
  if (auto* tw = dynamic_cast<const groups::TwistedSl2Model*>(&model)) return tw->encode(m, false);
  throw DomainError("group is not given by 2x2 matrices");
}

groups::Mat mat_pow(const gf::FieldCtx& f, const groups::Mat& m, std::uint64_t k) {
  groups::Mat r = groups::mat_identity(f, m.dim);
  for (std::uint64_t i = 0; i < k; ++i) r = groups::mat_mul(f, r, m);
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

}  // namespace

unsigned require_even_prime_power(std::uint64_t q, unsigned min_e, const std::string& what) {
  const unsigned e = gf::log2_exact(q);
  if (e == 0 || e < min_e)
    throw DomainError(what + " needs q = 2^e with e >= " + std::to_string(min_e) + ", got q = " + std::to_string(q));
  return e;
}

Rat DegreeSpec::variable_at(std::uint64_t q) const {
  const unsigned e = require_even_prime_power(q, min_exponent, family);
  if (odd_exponent && e % 2 == 0) throw DomainError(family + " needs an odd power of two, got q = " + std::to_string(q));
  if (variable == "r") return Rat(std::int64_t{1} << ((e + 1) / 2));
  return Rat(static_cast<std::int64_t>(q));
}

PolyQ DegreeSpec::total_degree() const {
  PolyQ t;
  for (const auto& e : entries) t += e.degree * e.multiplicity;
  return t;
}

PolyQ DegreeSpec::sum_of_squares() const {
  PolyQ t;
  for (const auto& e : entries) t += e.degree * e.degree * e.multiplicity;
  return t;
}

std::vector<DegreeRow> DegreeSpec::evaluate(std::uint64_t q) const {
  const Rat x = variable_at(q);
  std::vector<DegreeRow> rows;
  for (const auto& e : entries) rows.push_back({e.label, e.degree(x), e.multiplicity(x)});
  return rows;
}

std::vector<Rat> DegreeSpec::degree_multiset(std::uint64_t q) const {
  std::vector<Rat> out;
  for (const auto& row : evaluate(q)) {
    auto m = row.multiplicity.to_int64();
    if (!m || *m < 0) throw CrossCheckError(family + ": multiplicity of " + row.label + " is not a nonnegative integer");
    for (std::int64_t i = 0; i < *m; ++i) out.push_back(row.degree);
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json DegreeSpec::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) rows.push_back({e.label, e.degree.to_json(), e.multiplicity.to_json()});
  return {{"family", family}, {"variable", variable}, {"entries", rows}, {"order", order.to_json()}};
}

DegreeSpec sl2_degree_spec() {
  DegreeSpec d;
  d.family = "sl2";
  d.validity = "q = 2^e, e >= 2";
  d.entries = {entry("Tr", 1, 1), entry("psi", kQ, 1), entry("chi_s", kQ + 1, half(kQ - 2)),
               entry("theta_j", kQ - 1, half(kQ))};
  d.order = kQ.pow(3) - kQ;
  return d;
}

DegreeSpec wreath_degree_spec() {
  const PolyQ p = kQ + 1, m = kQ - 1, two(2);
  DegreeSpec d;
  d.family = "wreath-sp2";
  d.validity = "q = 2^e, e >= 2";
  d.entries = {
      entry("(Tr x Tr)_1", 1, 1),
      entry("(Tr x Tr)_2", 1, 1),
      entry("Tr x psi", two * kQ, 1),
      entry("Tr x chi_s", two * p, half(kQ - 2)),
      entry("Tr x theta_j", two * m, half(kQ)),
      entry("(psi x psi)_1", kQ * kQ, 1),
      entry("(psi x psi)_2", kQ * kQ, 1),
      entry("psi x chi_s", two * kQ * p, half(kQ - 2)),
      entry("psi x theta_j", two * kQ * m, half(kQ)),
      entry("(chi_s x chi_s)_1", p * p, half(kQ - 2)),
      entry("(chi_s x chi_s)_2", p * p, half(kQ - 2)),
      entry("chi_s x chi_s'", two * p * p, (kQ - 2) * (kQ - 4) * PolyQ(Rat(1, 8))),
      entry("chi_s x theta_j", two * (kQ * kQ - 1), kQ * (kQ - 2) * PolyQ(Rat(1, 4))),
      entry("(theta_j x theta_j)_1", m * m, half(kQ)),
      entry("(theta_j x theta_j)_2", m * m, half(kQ)),
      entry("theta_j x theta_j'", two * m * m, kQ * (kQ - 2) * PolyQ(Rat(1, 8))),
  };
  d.order = two * kQ * kQ * (kQ * kQ - 1).pow(2);
  return d;
}

DegreeSpec ext_degree_spec() {
  const PolyQ q2 = kQ * kQ;
  DegreeSpec d;
  d.family = "ext-sp2q2";
  d.validity = "q = 2^e, e >= 2";
  d.entries = {
      entry("(Tr)_1", 1, 1),
      entry("(Tr)_2", 1, 1),
      entry("(psi)_1", q2, 1),
      entry("(psi)_2", q2, 1),
      entry("(chi_s)_1", q2 + 1, kQ - 1),
      entry("(chi_s)_2", q2 + 1, kQ - 1),
      entry("chi_s fused", PolyQ(2) * (q2 + 1), (q2 - PolyQ(2) * kQ) * PolyQ(Rat(1, 4))),
      entry("theta_j fused", PolyQ(2) * (q2 - 1), q2 * PolyQ(Rat(1, 4))),
  };
  d.order = PolyQ(2) * q2 * (q2 * q2 - 1);
  return d;
}

DegreeSpec suzuki_degree_spec() {
  const PolyQ r = PolyQ::var();
  const PolyQ q = half(r * r);
  DegreeSpec d;
  d.family = "sz";
  d.variable = "r";
  d.validity = "q = 2^(2n+1), n >= 1, r = 2^(n+1), q = r^2/2";
  d.min_exponent = 3;
  d.odd_exponent = true;
  d.entries = {
      entry("trivial", 1, 1),
      entry("doubly transitive", q * q, 1),
      entry("degree q^2+1", q * q + 1, half(q - 2)),
      entry("complex pair", half(r) * (q - 1), 2),
      entry("degree (q-r+1)(q-1)", (q - r + 1) * (q - 1), (q + r) * PolyQ(Rat(1, 4))),
      entry("degree (q+r+1)(q-1)", (q + r + 1) * (q - 1), (q - r) * PolyQ(Rat(1, 4))),
  };
  d.order = q * q * (q * q + 1) * (q - 1);
  return d;
}

groups::Mat sl2_nonsplit_torus_generator(std::uint64_t q) {
  require_even_prime_power(q, 1, "sl2");
  auto g = groups::build_group("sl2:" + std::to_string(q));
  std::optional<groups::Code> best;
  for (groups::Code c : g->elements())
    if ((!best || c < *best) && g->model().element_order(c) == q + 1) best = c;
  if (!best) throw CrossCheckError("no element of order q + 1 in SL_2(" + std::to_string(q) + ")");
  return *g->model().matrix(*best);
}

CharTable sl2_table(std::uint64_t q, const chartab::SpacePtr& space) {
  require_even_prime_power(q, 2, "sl2_table");
  const std::int64_t qq = static_cast<std::int64_t>(q);
  if (space->order() != q * (q * q - 1) || space->class_count() != q + 1)
    throw DomainError(space->label() + " does not have the order and class count of SL_2(" + std::to_string(q) + ")");
  auto f = gf::field_of_size(q);
  const auto& model = space->group().model();
  const std::size_t k = space->class_count();

  groups::Mat c = groups::mat_identity(*f, 2);
  c.at(1, 0) = f->one();
  const groups::Mat b = sl2_nonsplit_torus_generator(q);

  std::vector<std::size_t> col_c(1), col_a, col_b;
  col_c[0] = space->class_of(embed_sl2(model, c));
  for (std::int64_t t = 1; t <= (qq - 2) / 2; ++t) {
    groups::Mat a = groups::mat_zero(2);
    a.at(0, 0) = f->gamma_pow(t);
    a.at(1, 1) = f->gamma_pow(-t);
    col_a.push_back(space->class_of(embed_sl2(model, a)));
  }
  for (std::int64_t m = 1; m <= qq / 2; ++m) col_b.push_back(space->class_of(embed_sl2(model, mat_pow(*f, b, m))));
  {
    std::vector<std::size_t> all;
    all.reserve(k);
    all.push_back(0);
    for (const auto* cols : {&col_c, &col_a, &col_b})
      for (auto i : *cols) all.push_back(i);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end() || all.size() != k)
      throw CrossCheckError("class representatives of SL_2(" + std::to_string(q) + ") collide");
  }

  auto row = [&](std::string label, std::int64_t degree) {
    Character ch{space, std::vector<Cyclo>(k), std::move(label)};
    ch.values[0] = Cyclo(degree);
    return ch;
  };
  CharTable t{space, {}};
  Character tr = row("Tr", 1);
  for (auto& v : tr.values) v = Cyclo(1);
  t.irreducibles.push_back(tr);

  Character psi = row("psi", qq);
  psi.values[col_c[0]] = Cyclo(0);
  for (auto i : col_a) psi.values[i] = Cyclo(1);
  for (auto i : col_b) psi.values[i] = Cyclo(-1);
  t.irreducibles.push_back(psi);

  for (std::int64_t s = 1; s <= (qq - 2) / 2; ++s) {
    Character chi = row("chi_" + std::to_string(s), qq + 1);
    chi.values[col_c[0]] = Cyclo(1);
    for (std::size_t ti = 0; ti < col_a.size(); ++ti) {
      const std::int64_t st = s * static_cast<std::int64_t>(ti + 1);
      chi.values[col_a[ti]] = gf::char_embed(*f, f->gamma_pow(st)) + gf::char_embed(*f, f->gamma_pow(-st));
    }
    for (auto i : col_b) chi.values[i] = Cyclo(0);
    t.irreducibles.push_back(chi);
  }
  for (std::int64_t j = 1; j <= qq / 2; ++j) {
    Character theta = row("theta_" + std::to_string(j), qq - 1);
    theta.values[col_c[0]] = Cyclo(-1);
    for (auto i : col_a) theta.values[i] = Cyclo(0);
    for (std::size_t mi = 0; mi < col_b.size(); ++mi) {
      const std::int64_t jm = j * static_cast<std::int64_t>(mi + 1);
      const auto n = static_cast<std::uint32_t>(q + 1);
      theta.values[col_b[mi]] = -(Cyclo::root_of_unity(n, jm) + Cyclo::root_of_unity(n, -jm));
    }
    t.irreducibles.push_back(theta);
  }
  return t;
}

CharTable sl2_table(std::uint64_t q, const groups::Limits& limits) {
  require_even_prime_power(q, 2, "sl2_table");
  return sl2_table(q, chartab::make_space(groups::build_group("sl2:" + std::to_string(q), limits), limits));
}

SplitFuse ext_split_rule(std::uint64_t q, std::uint64_t s) {
  require_even_prime_power(q, 1, "ext_split_rule");
  const std::uint64_t n = q * q - 1;
  if (s < 1 || s > (q * q - 2) / 2)
    throw DomainError("s = " + std::to_string(s) + " outside 1.." + std::to_string((q * q - 2) / 2));
  return (s * (q + 1)) % n == 0 || (s * (q - 1)) % n == 0 ? SplitFuse::split : SplitFuse::fuse;
}

Rat ext_total_degree(std::uint64_t q) {
  require_even_prime_power(q, 2, "ext_total_degree");
  return (kQ.pow(4) + kQ.pow(3) + kQ)(Rat(static_cast<std::int64_t>(q)));
}

Rat suzuki_total_degree(std::uint64_t q) {
  const unsigned e = require_even_prime_power(q, 3, "suzuki_total_degree");
  if (e % 2 == 0) throw DomainError("Suzuki groups need an odd power of two");
  const Rat qr(static_cast<std::int64_t>(q));
  return Rat(std::int64_t{1} << ((e + 1) / 2)) * (qr - 1) - qr * (qr - 1) + qr * qr * qr;
}

PolyQ sp4_total_degree_poly() { return kQ.pow(6) + kQ.pow(4) - kQ.pow(2); }

PolyQ sp4_max_degree_poly() { return kQ.pow(4) + PolyQ(2) * kQ.pow(3) + PolyQ(2) * kQ.pow(2) + PolyQ(2) * kQ + 1; }

Sp4DegreeFacts sp4_degree_facts(std::uint64_t q) {
  require_even_prime_power(q, 1, "sp4_degree_facts");
  const Rat x(static_cast<std::int64_t>(q));
  Sp4DegreeFacts f{sp4_total_degree_poly()(x), std::nullopt};
  if (q >= 4) f.max = sp4_max_degree_poly()(x);
  return f;
}

void validate(const AlphaParams& p) {
  require_even_prime_power(p.q, 2, "alpha-sum");
  const std::int64_t top = static_cast<std::int64_t>(p.q) - 2;
  for (std::int64_t v : {p.k, p.m, p.n})
    if (v < 1 || v > top) throw DomainError("parameters must lie in 1.." + std::to_string(top) + ", got " + std::to_string(v));
  if (p.m == p.n) throw DomainError("m and n must differ");
  if (p.m + p.n == top + 1) throw DomainError("m + n must differ from q - 1");
}

AlphaSum alpha_sum(const AlphaParams& p) {
  validate(p);
  auto f = gf::field_of_size(p.q);
  const std::int64_t n1 = static_cast<std::int64_t>(p.q) - 1;
  auto alpha = [&](std::int64_t x) {
    return gf::char_embed(*f, f->gamma_pow(x)) + gf::char_embed(*f, f->gamma_pow(-x));
  };
  exact::CycloSum acc(static_cast<std::uint32_t>(n1));
  for (std::int64_t j = 1; j <= (n1 - 1) / 2; ++j) acc.add_product(alpha(j * p.k) * alpha(j * p.m), alpha(j * p.n));
  auto exact_value = acc.result().as_rational();
  if (!exact_value) throw CrossCheckError("alpha sum is not rational");

  unsigned c = 0;
  for (std::int64_t sm : {1, -1})
    for (std::int64_t sn : {1, -1})
      if (mod(p.k + sm * p.m + sn * p.n, n1) == 0) ++c;
  const Rat counted = Rat(static_cast<std::int64_t>(c)) * Rat(n1) - Rat(4);
  if (*exact_value != counted)
    throw CrossCheckError("alpha sum routes disagree: " + exact_value->to_string() + " vs " + counted.to_string());
  return {*exact_value, counted, c};
}

Rat parabolic_inner_product(const AlphaParams& p) {
  validate(p);
  if (p.q <= 5) throw DomainError("the parabolic inner product formula needs q > 5");
  const Rat q(static_cast<std::int64_t>(p.q));
  return (Rat(3) + q + alpha_sum(p).cyclotomic) / (q - Rat(1));
}

}  // namespace sgp::families
