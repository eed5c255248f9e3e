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

#include "sgp/gelfand/gelfand.hpp"

#include <algorithm>

#include "sgp/chartab/dixon.hpp"
#include "sgp/error.hpp"
#include "sgp/groups/classes.hpp"
#include "sgp/groups/construct.hpp"

namespace sgp::gelfand {

using chartab::Character;
using chartab::CharTable;

namespace {

constexpr std::uint64_t kSchurBound = 20000;

void require_integral(const Rat& m, const std::string& what) {
  if (!m.is_integer() || m.sign() < 0) throw DomainError(what + ": multiplicity " + m.to_string() + " is not a nonnegative integer");
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::sgp ? "sgp" : "not_sgp"; }
std::string to_string(Method m) { return m == Method::full_check ? "full_check" : "total_char_shortcut"; }

nlohmann::json to_json(const SgpVerdict& v) {
  nlohmann::json w = nullptr;
  if (v.witness)
    w = {{"g_char_degree", v.witness->g_degree.to_string()},
         {"h_char_degree", v.witness->h_degree.to_string()},
         {"multiplicity", v.witness->multiplicity.to_string()}};
  return {{"G", v.g_label}, {"H", v.h_label}, {"verdict", to_string(v.verdict)}, {"method", to_string(v.method)},
          {"witness", w}};
}

MultiplicityCheck is_multiplicity_free(const Character& chi, const CharTable& t) {
  MultiplicityCheck out;
  const auto mults = chartab::decompose(chi, t);
  for (std::size_t i = 0; i < mults.size(); ++i) {
    require_integral(mults[i], "is_multiplicity_free");
    if (out.multiplicity_free && mults[i] > Rat(1)) {
      out.multiplicity_free = false;
      out.index = i;
      out.multiplicity = mults[i];
    }
  }
  return out;
}

SgpVerdict is_strong_gelfand_pair(const CharTable& g, const CharTable& h) {
  SgpVerdict v{g.space->label(), h.space->label(), Verdict::sgp, Method::full_check, std::nullopt};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Character r = chartab::restrict(g[i], h.space);
    for (std::size_t j = 0; j < h.size(); ++j) {
      const Rat m = chartab::inner_product(r, h[j]);
      require_integral(m, "restriction");
      if (m > Rat(1)) {
        v.verdict = Verdict::not_sgp;
        v.witness = Witness{i, j, g[i].degree(), h[j].degree(), m};
        return v;
      }
    }
  }
  return v;
}

SgpVerdict strong_gelfand_by_induction(const CharTable& g, const CharTable& h) {
  SgpVerdict v{g.space->label(), h.space->label(), Verdict::sgp, Method::full_check, std::nullopt};
  for (std::size_t j = 0; j < h.size(); ++j) {
    const Character up = chartab::induce(h[j], g.space);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Rat m = chartab::inner_product(up, g[i]);
      require_integral(m, "induction");
      if (m > Rat(1)) {
        v.verdict = Verdict::not_sgp;
        v.witness = Witness{i, j, g[i].degree(), h[j].degree(), m};
        return v;
      }
    }
  }
  return v;
}

bool is_gelfand_pair(const CharTable& g, const CharTable& h) {
  return is_multiplicity_free(chartab::induce(chartab::trivial_character(h.space), g.space), g).multiplicity_free;
}

ShortcutResult total_char_shortcut(const Rat& tau_h_degree, const Rat& max_g_degree) {
  if (tau_h_degree.sign() <= 0 || max_g_degree.sign() <= 0) throw DomainError("degrees must be positive");
  return tau_h_degree < max_g_degree ? ShortcutResult::not_sgp : ShortcutResult::inconclusive;
}

Rat total_degree(const CharTable& t) {
  Rat s(0);
  for (const auto& d : t.degrees()) s += d;
  return s;
}

Rat max_degree(const CharTable& t) {
  Rat m(0);
  for (const auto& d : t.degrees()) m = std::max(m, d);
  return m;
}

ScanResult scan_maximal_sp4(std::uint64_t q, const groups::Limits& limits,
                            const std::function<void(const ScanEntry&)>& progress) {
  if (q != 2 && q != 4) throw ResourceError("scan-maximal enumerates sp4:q and is limited to q = 2 or 4");
  const std::string g_spec = "sp4:" + std::to_string(q);
  auto g = groups::build_group(g_spec, limits);
  auto g_space = chartab::make_space(g, limits);
  const CharTable g_table = chartab::dixon_schneider(g_space, limits);
  if (auto defect = chartab::table_defect(g_table)) throw CrossCheckError(g_spec + ": " + *defect);
  ScanResult out{g_spec, g->order(), total_degree(g_table), max_degree(g_table), {}};

  std::vector<groups::NamedSubgroup> subs =
      q == 2 ? groups::maximal_subgroups_s6(*g) : groups::maximal_subgroups_sp4(*g, limits);
  for (const auto& sub : subs) {
    limits.check_time("maximal-subgroup scan");
    auto h_space = chartab::make_space(sub.group, limits);
    const CharTable h_table = chartab::dixon_schneider(h_space, limits);
    if (auto defect = chartab::table_defect(h_table)) throw CrossCheckError(sub.label + ": " + *defect);
    ScanEntry e{sub.label, sub.group->order(), total_degree(h_table), {}};
    if (total_char_shortcut(e.total_degree, out.g_max_degree) == ShortcutResult::not_sgp) {
      e.verdict = SgpVerdict{g_spec, sub.label, Verdict::not_sgp, Method::total_char_shortcut, std::nullopt};
    } else {
      e.verdict = is_strong_gelfand_pair(g_table, h_table);
      e.verdict.g_label = g_spec;
      e.verdict.h_label = sub.label;
    }
    if (progress) progress(e);
    out.entries.push_back(std::move(e));
  }
  return out;
}

nlohmann::json to_json(const ScanResult& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j = to_json(e.verdict);
    j["order"] = e.order;
    j["h_total_degree"] = e.total_degree.to_string();
    entries.push_back(j);
  }
  return {{"G", r.g_label},
          {"order", r.g_order},
          {"g_total_degree", r.g_total_degree.to_string()},
          {"g_max_degree", r.g_max_degree.to_string()},
          {"subgroups", entries}};
}

bool schur_commutes(const groups::FinGroup& g, const groups::FinGroup& h, const groups::Limits& limits) {
  if (g.order() > kSchurBound)
    throw ResourceError("schur_commutes is limited to |G| <= " + std::to_string(kSchurBound) + ", got " +
                        std::to_string(g.order()));
  groups::require_subgroup(h, g);
  const groups::ClassData hc = groups::h_classes(g, h, limits);
  const std::size_t k = hc.count();
  const std::size_t n = g.order();
  std::vector<std::uint32_t> inverse_index(n);
  for (std::uint32_t x = 0; x < n; ++x) inverse_index[x] = g.require_index(g.inverse(g.element(x)));
  std::vector<std::uint32_t> counts(k * k);
  for (std::uint32_t rep : hc.reps) {
    limits.check_time("schur_commutes");
    std::fill(counts.begin(), counts.end(), 0);
    const groups::Code target = g.element(rep);
    for (std::uint32_t c = 0; c < n; ++c) {
      const std::uint32_t d = g.require_index(g.multiply(g.element(inverse_index[c]), target));
      ++counts[hc.class_of[c] * k + hc.class_of[d]];
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (counts[a * k + b] != counts[b * k + a]) return false;
  }
  return true;
}

}  // namespace sgp::gelfand
