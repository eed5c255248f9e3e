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

#include "sgp/cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "sgp/chartab/compare.hpp"
#include "sgp/chartab/dixon.hpp"
#include "sgp/chartab/export.hpp"
#include "sgp/cli/acceptance.hpp"
#include "sgp/families/families.hpp"
#include "sgp/gelfand/gelfand.hpp"
#include "sgp/gf/field.hpp"
#include "sgp/groups/construct.hpp"

namespace sgp::cli {

using exact::Rat;
using nlohmann::json;

namespace {

groups::Limits limits_of(const Options& o) {
  groups::Limits l;
  l.max_order = o.max_order;
  if (o.time_budget_seconds)
    l.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*o.time_budget_seconds));
  return l;
}

json field_json(std::uint64_t q) {
  auto f = gf::field_of_size(q);
  std::ostringstream mask;
  mask << "0x" << std::hex << f->modulus();
  return {{"q", q}, {"degree", f->degree()}, {"modulus", gf::polynomial_string(f->modulus())}, {"mask", mask.str()}};
}

std::string field_line(std::uint64_t q) {
  const json j = field_json(q);
  return "GF(" + std::to_string(q) + ") = GF(2)[x]/(" + j["modulus"].get<std::string>() + "), mask " +
         j["mask"].get<std::string>() + ", gamma = x";
}

int run_chartab(const Command& cmd, std::ostream& out) {
  const auto limits = limits_of(cmd.options);
  const auto& spec = cmd.groups[0];
  auto space = chartab::make_space(groups::build_group(spec, limits), limits);
  auto table = chartab::dixon_schneider(space, limits);
  if (auto defect = chartab::table_defect(table)) throw CrossCheckError(spec.text + ": " + *defect);
  if (spec.name == "sl2" && spec.q() >= 4 && !chartab::tables_equivalent(table, families::sl2_table(spec.q(), space)))
    throw CrossCheckError(spec.text + ": computed table differs from the closed-form SL_2 table");
  const bool field = cmd.options.show_field && spec.q() != 0;
  switch (cmd.options.format) {
    case Format::json: {
      json j = chartab::table_to_json(table);
      if (field) j["field"] = field_json(spec.q());
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      if (field) out << "# field: " << field_line(spec.q()) << '\n';
      out << chartab::table_to_csv(table);
      break;
    case Format::pretty:
      if (field) out << field_line(spec.q()) << '\n';
      out << chartab::table_to_pretty(table);
      break;
  }
  return kOk;
}

std::string witness_text(const gelfand::SgpVerdict& v, const chartab::CharTable* g, const chartab::CharTable* h) {
  if (!v.witness) return {};
  const auto& w = *v.witness;
  std::string gl = g ? (*g)[w.g_index].label : "X." + std::to_string(w.g_index + 1);
  std::string hl = h ? (*h)[w.h_index].label : "Y." + std::to_string(w.h_index + 1);
  return gl + " (degree " + w.g_degree.to_string() + ") restricted to H contains " + hl + " (degree " +
         w.h_degree.to_string() + ") with multiplicity " + w.multiplicity.to_string();
}

int run_sgp(const Command& cmd, std::ostream& out) {
  const auto limits = limits_of(cmd.options);
  auto g = groups::build_group(cmd.groups[0], limits);
  auto h = groups::build_in(cmd.groups[1], *g, limits);
  auto gt = chartab::dixon_schneider(chartab::make_space(g, limits), limits);
  auto ht = chartab::dixon_schneider(chartab::make_space(h, limits), limits);
  auto v = gelfand::is_strong_gelfand_pair(gt, ht);
  v.g_label = cmd.groups[0].text;
  v.h_label = cmd.groups[1].text;
  if (cmd.options.format == Format::json) {
    out << gelfand::to_json(v).dump(2) << '\n';
  } else {
    out << v.g_label << " > " << v.h_label << ": " << gelfand::to_string(v.verdict) << " ("
        << gelfand::to_string(v.method) << ")\n";
    if (v.witness) out << "  witness: " << witness_text(v, &gt, &ht) << '\n';
  }
  return kOk;
}

int run_scan(const Command& cmd, std::ostream& out, std::ostream& err) {
  const auto limits = limits_of(cmd.options);
  const auto q = static_cast<std::uint64_t>(cmd.integers[0]);
  std::function<void(const gelfand::ScanEntry&)> progress;
  if (cmd.options.format == Format::pretty)
    progress = [&](const gelfand::ScanEntry& e) { err << "  done " << e.label << '\n'; };
  auto r = gelfand::scan_maximal_sp4(q, limits, progress);
  switch (cmd.options.format) {
    case Format::json:
      out << gelfand::to_json(r).dump(2) << '\n';
      break;
    case Format::csv:
      out << "subgroup,order,total_degree,verdict,method\n";
      for (const auto& e : r.entries)
        out << e.label << ',' << e.order << ',' << e.total_degree << ',' << gelfand::to_string(e.verdict.verdict)
            << ',' << gelfand::to_string(e.verdict.method) << '\n';
      break;
    case Format::pretty:
      out << r.g_label << ": order " << r.g_order << ", total degree " << r.g_total_degree << ", max degree "
          << r.g_max_degree << '\n';
      for (const auto& e : r.entries) {
        out << std::left << std::setw(16) << e.label << std::right << std::setw(8) << e.order << std::setw(7)
            << e.total_degree.to_string() << "  " << gelfand::to_string(e.verdict.verdict) << " ("
            << gelfand::to_string(e.verdict.method) << ")";
        if (e.verdict.witness) out << "  witness: " << witness_text(e.verdict, nullptr, nullptr);
        out << '\n';
      }
      break;
  }
  return kOk;
}

int run_alpha(const Command& cmd, std::ostream& out) {
  const families::AlphaParams p{static_cast<std::uint64_t>(cmd.integers[0]), cmd.integers[1], cmd.integers[2],
                                cmd.integers[3]};
  const auto a = families::alpha_sum(p);
  if (a.cyclotomic != a.counting)
    throw CrossCheckError("alpha-sum routes disagree: " + a.cyclotomic.to_string() + " vs " + a.counting.to_string());
  const Rat q(static_cast<std::int64_t>(p.q));
  std::optional<Rat> ip;
  if (p.q > 5) ip = families::parabolic_inner_product(p);
  if (cmd.options.format == Format::json) {
    json j = {{"q", p.q},
              {"k", p.k},
              {"m", p.m},
              {"n", p.n},
              {"cyclotomic", a.cyclotomic.to_string()},
              {"counting", a.counting.to_string()},
              {"zero_combinations", a.zero_combinations},
              {"inner_product", ip ? json(ip->to_string()) : json(nullptr)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << a.cyclotomic;
  if (a.cyclotomic == q - Rat(5)) out << " (= q-5)";
  if (ip) out << "; inner product = " << *ip;
  out << '\n';
  out << "cyclotomic route: " << a.cyclotomic << '\n';
  out << "counting route:   " << a.counting << " = " << a.zero_combinations << "*(q-1) - 4\n";
  return kOk;
}

families::DegreeSpec degree_spec_named(const std::string& name) {
  if (name == "sl2") return families::sl2_degree_spec();
  if (name == "wreath-sp2") return families::wreath_degree_spec();
  if (name == "ext-sp2q2") return families::ext_degree_spec();
  return families::suzuki_degree_spec();
}

int run_families(const Command& cmd, std::ostream& out) {
  const auto q = static_cast<std::uint64_t>(cmd.integers[0]);
  if (cmd.family == "sp4") {
    const auto facts = families::sp4_degree_facts(q);
    if (cmd.options.format == Format::json) {
      json j = {{"family", "sp4"},
                {"q", q},
                {"total_degree_poly", families::sp4_total_degree_poly().to_json()},
                {"max_degree_poly", families::sp4_max_degree_poly().to_json()},
                {"total_degree", facts.total.to_string()},
                {"max_degree", facts.max ? json(facts.max->to_string()) : json(nullptr)}};
      out << j.dump(2) << '\n';
    } else if (cmd.options.format == Format::csv) {
      out << "quantity,polynomial,value\n";
      out << "total_degree," << families::sp4_total_degree_poly().to_string() << ',' << facts.total << '\n';
      out << "max_degree," << families::sp4_max_degree_poly().to_string() << ','
          << (facts.max ? facts.max->to_string() : "") << '\n';
    } else {
      out << "sp4 at q = " << q << '\n';
      out << "total degree " << families::sp4_total_degree_poly().to_string() << " = " << facts.total << '\n';
      out << "max degree   " << families::sp4_max_degree_poly().to_string() << " = "
          << (facts.max ? facts.max->to_string() : "(formula needs q >= 4)") << '\n';
    }
    return kOk;
  }
  const auto spec = degree_spec_named(cmd.family);
  const auto rows = spec.evaluate(q);
  const Rat x = spec.variable_at(q);
  const Rat total = spec.total_degree()(x);
  const Rat squares = spec.sum_of_squares()(x);
  const Rat order = spec.order(x);
  if (squares != order)
    throw CrossCheckError(cmd.family + ": sum of squared degrees " + squares.to_string() + " differs from |G| = " +
                          order.to_string());
  switch (cmd.options.format) {
    case Format::json: {
      json j = spec.to_json();
      j["q"] = q;
      j["total_degree"] = total.to_string();
      j["order"] = order.to_string();
      json ev = json::array();
      for (const auto& r : rows)
        ev.push_back({{"label", r.label}, {"degree", r.degree.to_string()}, {"multiplicity", r.multiplicity.to_string()}});
      j["evaluation"] = ev;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "label,degree,multiplicity\n";
      for (const auto& r : rows) out << r.label << ',' << r.degree << ',' << r.multiplicity << '\n';
      break;
    case Format::pretty:
      out << spec.family << " at q = " << q;
      if (spec.variable != "q") out << " (" << spec.variable << " = " << x << ")";
      out << ", order " << order << '\n';
      std::size_t width = 0;
      for (const auto& r : rows) width = std::max(width, r.label.size());
      for (const auto& r : rows)
        out << "  " << std::left << std::setw(static_cast<int>(width)) << r.label << std::right << std::setw(10) << r.degree.to_string()
            << "  x " << r.multiplicity << '\n';
      out << "total degree " << total << ", sum of squares " << squares << '\n';
      break;
  }
  return kOk;
}

int run_show_field(const Command& cmd, std::ostream& out) {
  const auto q = static_cast<std::uint64_t>(cmd.integers[0]);
  if (cmd.options.format == Format::json)
    out << field_json(q).dump(2) << '\n';
  else
    out << field_line(q) << '\n';
  return kOk;
}

int run_verify(const Command& cmd, std::ostream& out) {
  const Tier tier = cmd.options.full ? Tier::full : cmd.options.deep ? Tier::deep : Tier::basic;
  const bool as_json = cmd.options.format == Format::json;
  auto results = run_acceptance(tier, [&](const CriterionResult& r) {
    if (!as_json) out << format_result(r) << std::endl;
  });
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    if (!r.skipped && !r.passed) ok = false;
    arr.push_back({{"id", r.id},
                   {"title", r.title},
                   {"tier", static_cast<int>(r.tier)},
                   {"status", r.skipped ? "skipped" : r.passed ? "pass" : "fail"},
                   {"detail", r.detail}});
  }
  if (as_json) out << arr.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.verb) {
      case Verb::chartab: return run_chartab(cmd, out);
      case Verb::sgp: return run_sgp(cmd, out);
      case Verb::scan_maximal: return run_scan(cmd, out, err);
      case Verb::alpha_sum: return run_alpha(cmd, out);
      case Verb::families: return run_families(cmd, out);
      case Verb::show_field: return run_show_field(cmd, out);
      case Verb::verify_paper: return run_verify(cmd, out);
    }
  } catch (const ResourceError& ex) {
    err << "resource limit: " << ex.what() << '\n';
    return kResource;
  } catch (const CrossCheckError& ex) {
    err << "internal cross-check failed: " << ex.what() << '\n';
    return kCrossCheck;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run_words(const std::vector<std::string>& words, const Options& options, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_command(words, options);
  } catch (const groups::SpecError& ex) {
    std::string line;
    for (std::size_t i = 0; i < words.size(); ++i) line += (i ? " " : "") + words[i];
    err << "error: " << ex.what() << '\n';
    if (!line.empty()) err << "  " << line << '\n' << "  " << std::string(ex.column() - 1, ' ') << "^\n";
    return kUsage;
  } catch (const ResourceError& ex) {
    err << "resource limit: " << ex.what() << '\n';
    return kResource;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return run(cmd, out, err);
}

}  // namespace sgp::cli
