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

#include "sgp/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "sgp/chartab/compare.hpp"
#include "sgp/chartab/dixon.hpp"
#include "sgp/families/families.hpp"
#include "sgp/gelfand/gelfand.hpp"
#include "sgp/groups/construct.hpp"

namespace sgp::cli {

using chartab::CharTable;
using chartab::Character;
using exact::Rat;
using families::PolyQ;
using gelfand::Verdict;

namespace {

struct Context {
  groups::Limits limits;
  std::vector<CharTable> tables;
  std::optional<CharTable> s6;

  CharTable compute(const groups::GroupPtr& g) {
    auto t = chartab::dixon_schneider(chartab::make_space(g, limits), limits);
    tables.push_back(t);
    return t;
  }
  const CharTable& s6_table() {
    if (!s6) s6 = compute(groups::build_group("s6", limits));
    return *s6;
  }
};

/// Accumulates failed checks; an empty list means the criterion holds.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "FAILED: " : "; ") + f;
    for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string str(const Rat& r) { return r.to_string(); }

std::vector<Rat> sorted(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string multiset_text(const std::vector<Rat>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "}";
}

void sl2_reproduction(Context& ctx, Checks& c) {
  for (std::uint64_t q : {4, 8, 16}) {
    auto g = groups::build_group("sl2:" + std::to_string(q), ctx.limits);
    auto dixon = ctx.compute(g);
    auto closed = families::sl2_table(q, dixon.space);
    ctx.tables.push_back(closed);
    c.expect(chartab::tables_equivalent(dixon, closed), "sl2:" + std::to_string(q) + " tables differ");
  }
  c.note("q = 4, 8, 16 match up to row/column permutation");
}

void wreath_claim(Context& ctx, Checks& c) {
  auto t = ctx.compute(groups::build_group("wreath-sp2:4", ctx.limits));
  const Rat total = gelfand::total_degree(t);
  c.expect(total == Rat(316), "total degree " + str(total) + " != 316");
  const auto got = sorted(t.degrees());
  const auto want = sorted(families::wreath_degree_spec().degree_multiset(4));
  c.expect(got == want, "degree multiset " + multiset_text(got) + " != family " + multiset_text(want));
  const auto bound = families::sp4_degree_facts(4).max;
  c.expect(bound.has_value() && *bound == Rat(425), "sp4 max-degree formula at q = 4 is not 425");
  if (bound)
    c.expect(gelfand::total_char_shortcut(total, *bound) == gelfand::ShortcutResult::not_sgp,
             "shortcut does not fire for " + str(total) + " < " + str(*bound));
  c.note("total degree " + str(total) + " < " + (bound ? str(*bound) : "?"));
}

void ext_claim(Context& ctx, Checks& c) {
  auto g = groups::build_group("ext-sp2q2:4", ctx.limits);
  auto h = groups::build_in(groups::parse_group_spec("sl2:16"), *g, ctx.limits);
  auto gt = ctx.compute(g);
  auto hspace = chartab::make_space(h, ctx.limits);
  auto ht = families::sl2_table(16, hspace);
  ctx.tables.push_back(ht);

  Rat split_sum, fused_sum;
  std::set<std::int64_t> split_s;
  std::size_t theta_fused = 0, theta_total = 0;
  bool rule_agrees = true;
  for (const auto& psi : ht.irreducibles) {
    const auto sf = chartab::split_fuse(psi, gt.space);
    (sf == chartab::SplitFuse::split ? split_sum : fused_sum) += psi.degree();
    if (psi.label == "Tr" || psi.label == "psi") {
      c.expect(sf == chartab::SplitFuse::split, psi.label + " does not split");
    } else if (psi.label.rfind("theta_", 0) == 0) {
      ++theta_total;
      if (sf == chartab::SplitFuse::fuse) ++theta_fused;
    } else if (psi.label.rfind("chi_", 0) == 0) {
      const std::int64_t s = std::stoll(psi.label.substr(4));
      if (sf == chartab::SplitFuse::split) split_s.insert(s);
      if (families::ext_split_rule(4, static_cast<std::uint64_t>(s)) != sf) rule_agrees = false;
    }
  }
  c.expect(theta_total == 8 && theta_fused == 8,
           std::to_string(theta_fused) + " of " + std::to_string(theta_total) + " theta_j fuse");
  c.expect(split_s == std::set<std::int64_t>{3, 5, 6}, "chi_s split set differs from {3,5,6}");
  c.expect(rule_agrees, "closed-form split rule disagrees with computed split/fuse");
  const Rat total = gelfand::total_degree(gt);
  c.expect(total == Rat(324), "total degree " + str(total) + " != 324");
  c.expect(families::ext_total_degree(4) == Rat(324), "q^4+q^3+q at q = 4 != 324");
  c.expect(split_sum == Rat(68) && fused_sum == Rat(188),
           "split/fused degree sums " + str(split_sum) + "/" + str(fused_sum) + " != 68/188");
  c.expect(Rat(2) * split_sum + fused_sum == total, "2*split + fused != total degree");
  c.note("2*" + str(split_sum) + " + " + str(fused_sum) + " = " + str(total));
}

void alpha_claims(Context&, Checks& c) {
  for (std::int64_t q : {8, 16, 32}) {
    const families::AlphaParams p{static_cast<std::uint64_t>(q), q - 4, 1, 2};
    const auto a = families::alpha_sum(p);
    c.expect(a.cyclotomic == Rat(q - 5), "alpha_sum at q = " + std::to_string(q) + " is " + str(a.cyclotomic));
    c.expect(a.counting == a.cyclotomic, "routes disagree at q = " + std::to_string(q));
    const Rat ip = families::parabolic_inner_product(p);
    c.expect(ip == Rat(2), "inner product at q = " + std::to_string(q) + " is " + str(ip));
  }
  std::size_t exhaustive = 0;
  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::int64_t m = 1; m <= 6; ++m)
      for (std::int64_t n = 1; n <= 6; ++n) {
        if (m == n || m + n == 7) continue;
        const auto a = families::alpha_sum({8, k, m, n});
        ++exhaustive;
        if (a.cyclotomic != a.counting)
          c.expect(false, "routes disagree at (8," + std::to_string(k) + "," + std::to_string(m) + "," +
                              std::to_string(n) + ")");
      }
  std::mt19937_64 rng(20260101);
  for (std::int64_t q : {16, 32}) {
    std::uniform_int_distribution<std::int64_t> pick(1, q - 2);
    for (int i = 0; i < 10000;) {
      const families::AlphaParams p{static_cast<std::uint64_t>(q), pick(rng), pick(rng), pick(rng)};
      if (p.m == p.n || p.m + p.n == q - 1) continue;
      ++i;
      const auto a = families::alpha_sum(p);
      if (a.cyclotomic != a.counting) {
        c.expect(false, "routes disagree at q = " + std::to_string(q));
        break;
      }
    }
  }
  c.note(std::to_string(exhaustive) + " triples at q = 8, 2 x 10000 random triples");
}

void suzuki_claim(Context& ctx, Checks& c) {
  auto t = ctx.compute(groups::build_group("sz:8", ctx.limits));
  const auto got = sorted(t.degrees());
  std::vector<Rat> want;
  for (int d : {1, 14, 14, 35, 35, 35, 64, 65, 65, 65, 91}) want.emplace_back(d);
  c.expect(got == want, "degree multiset " + multiset_text(got));
  c.expect(sorted(families::suzuki_degree_spec().degree_multiset(8)) == want, "family multiset differs");
  const Rat total = gelfand::total_degree(t);
  c.expect(total == Rat(484), "total degree " + str(total) + " != 484");
  c.expect(families::suzuki_total_degree(8) == Rat(484), "closed-form total at q = 8 != 484");
  c.note("degrees " + multiset_text(got));
}

void s6_scan(Context& ctx, Checks& c) {
  const auto& g = ctx.s6_table();
  const auto& s6 = g.space->group();
  std::string verdicts;
  for (const auto& sub : groups::maximal_subgroups_s6(s6)) {
    auto v = gelfand::is_strong_gelfand_pair(g, ctx.compute(sub.group));
    c.expect(v.verdict == Verdict::sgp, sub.label + " is not sgp");
    verdicts += sub.label + ":" + gelfand::to_string(v.verdict) + " ";
  }
  for (const auto& sub : groups::nonmaximal_subgroups_s6(s6)) {
    if (sub.label != "A5" && sub.label != "C6") continue;
    auto v = gelfand::is_strong_gelfand_pair(g, ctx.compute(sub.group));
    c.expect(v.verdict == Verdict::not_sgp, sub.label + " is sgp");
    verdicts += sub.label + ":" + gelfand::to_string(v.verdict) + " ";
  }
  verdicts.pop_back();
  c.note(verdicts);
}

void sp4_scan(Context& ctx, Checks& c) {
  auto r = gelfand::scan_maximal_sp4(4, ctx.limits);
  c.expect(r.entries.size() == 7, std::to_string(r.entries.size()) + " maximal subgroups");
  for (const auto& e : r.entries) {
    c.expect(e.verdict.verdict == Verdict::not_sgp, e.label + " is sgp");
    if (e.label.rfind("parabolic", 0) == 0) {
      c.expect(e.verdict.method == gelfand::Method::full_check && e.verdict.witness &&
                   e.verdict.witness->multiplicity >= Rat(2),
               e.label + " lacks a full-check witness");
    }
  }
  c.expect(r.g_total_degree == Rat(4336), "total degree " + str(r.g_total_degree) + " != 4336");
  c.expect(r.g_max_degree == Rat(425), "max degree " + str(r.g_max_degree) + " != 425");
  c.note("total " + str(r.g_total_degree) + ", max " + str(r.g_max_degree));
}

void subfield_inequality(Context& ctx, Checks& c) {
  const PolyQ total = families::sp4_total_degree_poly();
  const PolyQ max = families::sp4_max_degree_poly();
  for (std::int64_t q0 : {2, 4})
    for (unsigned r : {2u, 3u}) {
      const PolyQ gap = max.compose(PolyQ::monomial(Rat(1), r)) - total;
      const std::string at = "(q0 = " + std::to_string(q0) + ", r = " + std::to_string(r) + ")";
      c.expect(!gap.is_zero() && gap.shifted(Rat(2)).all_coefficients_nonnegative(),
               "gap polynomial not positive on q0 >= 2 " + at);
      c.expect(gap(Rat(q0)) > Rat(0), "inequality fails " + at);
    }
  const Rat tau = gelfand::total_degree(ctx.s6_table());
  const auto bound = families::sp4_degree_facts(4).max;
  c.expect(tau == Rat(76), "total degree of S6 is " + str(tau));
  c.expect(bound && tau < *bound, "76 < 425 fails");
  c.note("tau_S6(1) = " + str(tau) + " < " + (bound ? str(*bound) : "?"));
}

void schur_equivalence(Context& ctx, Checks& c) {
  auto s4 = groups::symmetric_group(4);
  auto g = chartab::dixon_schneider(chartab::make_space(s4, ctx.limits), ctx.limits);
  std::size_t n = 0, sgp = 0;
  for (const auto& h : groups::all_subgroups(*s4)) {
    auto ht = chartab::dixon_schneider(chartab::make_space(h, ctx.limits), ctx.limits);
    const bool full = gelfand::is_strong_gelfand_pair(g, ht).verdict == Verdict::sgp;
    const bool schur = gelfand::schur_commutes(*s4, *h, ctx.limits);
    ++n;
    sgp += full;
    c.expect(full == schur, "S4 subgroup of order " + std::to_string(h->order()) + " disagrees");
  }
  const auto& s6t = ctx.s6_table();
  const auto& s6 = s6t.space->group();
  for (const auto& sub : groups::maximal_subgroups_s6(s6)) {
    if (sub.label != "S5" && sub.label != "A6") continue;
    auto ht = chartab::dixon_schneider(chartab::make_space(sub.group, ctx.limits), ctx.limits);
    const bool full = gelfand::is_strong_gelfand_pair(s6t, ht).verdict == Verdict::sgp;
    const bool schur = gelfand::schur_commutes(s6, *sub.group, ctx.limits);
    c.expect(full == schur, "(S6, " + sub.label + ") disagrees");
  }
  c.note(std::to_string(n) + " subgroups of S4 (" + std::to_string(sgp) + " sgp), (S6,S5), (S6,A6)");
}

Character random_combination(const CharTable& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(0, 2);
  Character sum{t.space, std::vector<exact::Cyclo>(t.space->class_count()), "combination"};
  for (const auto& chi : t.irreducibles) {
    const int a = coef(rng);
    for (int i = 0; i < a; ++i) sum = sum + chi;
  }
  return sum;
}

void property_suites(Context& ctx, Checks& c) {
  for (const auto& t : ctx.tables)
    if (auto d = chartab::table_defect(t)) c.expect(false, t.space->label() + ": " + *d);

  const auto& g = ctx.s6_table();
  const auto& s6 = g.space->group();
  std::mt19937_64 rng(424242);
  for (const auto& sub : groups::maximal_subgroups_s6(s6)) {
    if (sub.label != "S5") continue;
    auto h = chartab::dixon_schneider(chartab::make_space(sub.group, ctx.limits), ctx.limits);
    for (int i = 0; i < 100; ++i) {
      const Character psi = random_combination(h, rng);
      const Character chi = random_combination(g, rng);
      const Rat lhs = chartab::inner_product(chartab::induce(psi, g.space), chi);
      const Rat rhs = chartab::inner_product(psi, chartab::restrict(chi, h.space));
      if (lhs != rhs) {
        c.expect(false, "Frobenius reciprocity fails: " + str(lhs) + " vs " + str(rhs));
        break;
      }
    }
  }

  std::size_t chains = 0;
  for (const auto& k : groups::nonmaximal_subgroups_s6(s6)) {
    auto kt = chartab::dixon_schneider(chartab::make_space(k.group, ctx.limits), ctx.limits);
    const Verdict vk = gelfand::is_strong_gelfand_pair(g, kt).verdict;
    auto subs = groups::all_subgroups(*k.group);
    std::shuffle(subs.begin(), subs.end(), rng);
    if (subs.size() > 12) subs.resize(12);
    for (const auto& h : subs) {
      auto ht = chartab::dixon_schneider(chartab::make_space(h, ctx.limits), ctx.limits);
      const Verdict vh = gelfand::is_strong_gelfand_pair(g, ht).verdict;
      ++chains;
      c.expect(!(vk == Verdict::not_sgp && vh == Verdict::sgp),
               "monotonicity fails below " + k.label + " at order " + std::to_string(h->order()));
    }
  }
  c.note(std::to_string(ctx.tables.size()) + " tables, 100 reciprocity pairs, " + std::to_string(chains) +
         " chains");
}

struct Criterion {
  int id;
  const char* title;
  Tier tier;
  double budget;
  void (*body)(Context&, Checks&);
};

const Criterion kCriteria[] = {
    {1, "SL2(q) table equals the closed form, q = 4, 8, 16", Tier::basic, 120, sl2_reproduction},
    {2, "wreath-sp2:4 total degree 316 and shortcut verdict", Tier::deep, 60, wreath_claim},
    {3, "ext-sp2q2:4 split/fuse pattern and total degree 324", Tier::deep, 60, ext_claim},
    {4, "alpha-sum identities and route agreement", Tier::basic, 120, alpha_claims},
    {5, "Sz(8) degree multiset and total degree 484", Tier::deep, 120, suzuki_claim},
    {6, "S6 maximal subgroups sgp, A5 and C6 not", Tier::basic, 60, s6_scan},
    {7, "Sp4(4) maximal subgroup scan and degree facts", Tier::full, 1800, sp4_scan},
    {8, "subfield degree inequality and 76 < 425", Tier::basic, 60, subfield_inequality},
    {9, "Schur-ring commutativity matches sgp", Tier::basic, 120, schur_equivalence},
    {10, "orthogonality, reciprocity and monotonicity", Tier::basic, 120, property_suites},
};

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.skipped ? "[SKIP]" : r.passed ? "[PASS]" : "[FAIL]") << ' ' << (r.id < 10 ? " " : "") << r.id << "  "
     << r.title;
  if (r.skipped) {
    os << "  (needs " << (r.tier == Tier::full ? "--full" : "--deep") << ")";
  } else {
    os << "  (" << seconds_text(r.seconds) << " / " << seconds_text(r.budget_seconds) << ")";
    if (!r.detail.empty()) os << "  " << r.detail;
  }
  return os.str();
}

std::vector<CriterionResult> run_acceptance(Tier tier, const std::function<void(const CriterionResult&)>& on_result) {
  Context ctx;
  std::vector<CriterionResult> out;
  for (const auto& cr : kCriteria) {
    CriterionResult r{cr.id, cr.title, cr.tier, false, false, 0.0, cr.budget, {}};
    if (static_cast<int>(cr.tier) > static_cast<int>(tier)) {
      r.skipped = true;
    } else {
      Checks checks;
      const auto start = std::chrono::steady_clock::now();
      try {
        cr.body(ctx, checks);
      } catch (const std::exception& ex) {
        checks.expect(false, std::string("exception: ") + ex.what());
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      checks.expect(r.seconds <= r.budget_seconds, "over runtime budget");
      r.passed = checks.ok();
      r.detail = checks.detail();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sgp::cli
