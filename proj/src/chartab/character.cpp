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

#include "sgp/chartab/character.hpp"

#include <numeric>

#include "sgp/error.hpp"

namespace sgp::chartab {

using exact::Cyclo;
using exact::CycloSum;
using exact::Rat;

namespace {

std::uint32_t common_order(const std::vector<Cyclo>& a, std::uint32_t start = 1) {
  std::uint32_t n = start;
  for (const auto& v : a) n = exact::lcm_order(n, v.order());
  return n;
}

void require_same_space(const Character& a, const Character& b) {
  if (a.space != b.space && &a.space->group() != &b.space->group())
    throw DomainError("characters of different groups: " + a.space->label() + " and " + b.space->label());
}

}  // namespace

ClassSpace::ClassSpace(groups::GroupPtr group, groups::ClassData classes)
    : group_(std::move(group)), classes_(std::move(classes)) {
  for (auto o : classes_.rep_orders) exponent_ = std::lcm(exponent_, o);
}

SpacePtr make_space(groups::GroupPtr group, const groups::Limits& limits) {
  auto cd = groups::conjugacy_classes(*group, limits);
  return std::make_shared<const ClassSpace>(std::move(group), std::move(cd));
}

std::uint32_t ClassSpace::class_of(groups::Code c) const { return classes_.class_of[group_->require_index(c)]; }

std::uint32_t ClassSpace::power_class(std::size_t i, std::uint64_t k) const {
  return class_of(group_->model().power(rep(i), k));
}

Rat Character::degree() const {
  auto d = values.at(0).as_rational();
  if (!d) throw CrossCheckError("character value at the identity is irrational");
  return *d;
}

bool operator==(const Character& a, const Character& b) {
  return &a.space->group() == &b.space->group() && a.values == b.values;
}

Character operator+(const Character& a, const Character& b) {
  require_same_space(a, b);
  Character r{a.space, a.values, ""};
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

std::vector<Rat> CharTable::degrees() const {
  std::vector<Rat> d;
  for (const auto& c : irreducibles) d.push_back(c.degree());
  return d;
}

Rat inner_product(const Character& a, const Character& b) {
  require_same_space(a, b);
  const ClassSpace& s = *a.space;
  CycloSum acc(common_order(b.values, common_order(a.values)));
  for (std::size_t i = 0; i < s.class_count(); ++i)
    acc.add_product(a.values[i], b.values[i].conjugate(), Rat(static_cast<std::int64_t>(s.class_size(i))));
  auto r = acc.result().as_rational();
  if (!r) throw CrossCheckError("inner product is not rational");
  return *r / Rat(static_cast<std::int64_t>(s.order()));
}

std::vector<std::uint32_t> fusion_map(const ClassSpace& h, const ClassSpace& g) {
  groups::require_subgroup(h.group(), g.group());
  std::vector<std::uint32_t> f(h.class_count());
  for (std::size_t i = 0; i < h.class_count(); ++i) f[i] = g.class_of(h.rep(i));
  return f;
}

Character induce(const Character& psi, const SpacePtr& g) {
  const ClassSpace& h = *psi.space;
  const auto fuse = fusion_map(h, *g);
  std::vector<std::vector<std::size_t>> parts(g->class_count());
  for (std::size_t d = 0; d < fuse.size(); ++d) parts[fuse[d]].push_back(d);
  const std::uint32_t n = common_order(psi.values);
  Character out{g, std::vector<Cyclo>(g->class_count()), psi.label.empty() ? "" : psi.label + "^G"};
  for (std::size_t i = 0; i < g->class_count(); ++i) {
    if (parts[i].empty()) continue;
    CycloSum acc(n);
    for (auto d : parts[i]) acc.add(psi.values[d], Rat(static_cast<std::int64_t>(h.class_size(d))));
    out.values[i] = acc.result() * Rat(static_cast<std::int64_t>(g->order()),
                                       static_cast<std::int64_t>(g->class_size(i) * h.order()));
  }
  return out;
}

Character restrict(const Character& chi, const SpacePtr& h) {
  const auto fuse = fusion_map(*h, *chi.space);
  Character out{h, std::vector<Cyclo>(h->class_count()), chi.label.empty() ? "" : chi.label + "_H"};
  for (std::size_t d = 0; d < fuse.size(); ++d) out.values[d] = chi.values[fuse[d]];
  return out;
}

Character total_character(const CharTable& t) {
  const std::size_t k = t.space->class_count();
  std::uint32_t n = 1;
  for (const auto& c : t.irreducibles) n = common_order(c.values, n);
  Character out{t.space, std::vector<Cyclo>(k), "total"};
  for (std::size_t i = 0; i < k; ++i) {
    CycloSum acc(n);
    for (const auto& c : t.irreducibles) acc.add(c.values[i]);
    out.values[i] = acc.result();
  }
  return out;
}

Character trivial_character(const SpacePtr& space) {
  return Character{space, std::vector<Cyclo>(space->class_count(), Cyclo(1)), "trivial"};
}

Character regular_character(const SpacePtr& space) {
  Character out{space, std::vector<Cyclo>(space->class_count(), Cyclo(0)), "regular"};
  out.values[0] = Cyclo(static_cast<std::int64_t>(space->order()));
  return out;
}

std::vector<Rat> decompose(const Character& chi, const CharTable& t) {
  std::vector<Rat> m;
  for (const auto& x : t.irreducibles) m.push_back(inner_product(chi, x));
  return m;
}

std::string to_string(SplitFuse s) { return s == SplitFuse::split ? "split" : "fuse"; }

SplitFuse split_fuse(const Character& psi, const SpacePtr& g) {
  if (g->order() != 2 * psi.space->order())
    throw DomainError("split_fuse needs a subgroup of index 2; |G:H| = " + std::to_string(g->order()) + "/" +
                      std::to_string(psi.space->order()));
  Character up = induce(psi, g);
  Rat norm = inner_product(up, up);
  if (norm == Rat(2)) return SplitFuse::split;
  if (norm == Rat(1)) return SplitFuse::fuse;
  throw CrossCheckError("induced norm " + norm.to_string() + " for an index-2 induction");
}

std::optional<std::string> table_defect(const CharTable& t) {
  const ClassSpace& s = *t.space;
  const std::size_t k = s.class_count();
  if (t.size() != k) return "table has " + std::to_string(t.size()) + " rows for " + std::to_string(k) + " classes";
  std::uint32_t n = 1;
  for (const auto& c : t.irreducibles) {
    if (c.values.size() != k) return "row of wrong length";
    n = common_order(c.values, n);
  }
  Rat squares(0);
  for (std::size_t r = 0; r < k; ++r) {
    const auto& v = t[r].values;
    auto d = v[0].as_rational();
    if (!d || !d->is_integer() || d->sign() <= 0) return "row " + std::to_string(r) + ": degree is not a positive integer";
    squares += *d * *d;
    for (std::size_t i = 0; i < k; ++i)
      if (v[i].conjugate() != v[s.classes().inverse_class[i]])
        return "row " + std::to_string(r) + ": value at the inverse class is not the conjugate";
  }
  if (squares != Rat(static_cast<std::int64_t>(s.order())))
    return "sum of squared degrees " + squares.to_string() + " differs from |G| = " + std::to_string(s.order());
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      CycloSum acc(n);
      for (std::size_t i = 0; i < k; ++i)
        acc.add_product(t[a].values[i], t[b].values[i].conjugate(), Rat(static_cast<std::int64_t>(s.class_size(i))));
      Cyclo want(a == b ? static_cast<std::int64_t>(s.order()) : 0);
      if (acc.result() != want) return "rows " + std::to_string(a) + ", " + std::to_string(b) + " not orthonormal";
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      CycloSum acc(n);
      for (std::size_t r = 0; r < k; ++r) acc.add_product(t[r].values[i], t[r].values[j].conjugate());
      Cyclo want(i == j ? static_cast<std::int64_t>(s.centralizer_order(i)) : 0);
      if (acc.result() != want)
        return "columns " + std::to_string(i) + ", " + std::to_string(j) + " violate column orthogonality";
    }
  }
  return std::nullopt;
}

}  // namespace sgp::chartab
