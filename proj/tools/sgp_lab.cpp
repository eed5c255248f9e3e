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

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgp/cli/run.hpp"

int main(int argc, char** argv) {
  using sgp::cli::Format;
  CLI::App app{"sgp-lab: character tables and strong Gelfand pair checks for Sp4(2^e) and relatives"};
  app.footer(
      "verbs:\n"
      "  chartab SPEC          character table of a group spec\n"
      "  sgp G H               strong Gelfand pair verdict for H inside G\n"
      "  scan-maximal Q        verdicts for the maximal subgroups of sp4:Q (Q = 2, 4)\n"
      "  alpha-sum Q K M N     the alpha triple sum by both routes\n"
      "  families NAME Q       degree families (sl2, wreath-sp2, ext-sp2q2, sz, sp4)\n"
      "  show-field Q          the modulus used for GF(Q)\n"
      "  verify-paper          acceptance suite (--deep, --full for larger tiers)\n"
      "group specs: sl2:q sp4:q wreath-sp2:q ext-sp2q2:q parabolic-p:q parabolic-q:q sz:q\n"
      "             sp4-sub:q:q0 so4+:q so4-:q s6 trivial\n"
      "exit codes: 0 ok, 1 check failed, 2 usage, 3 resource limit, 4 internal cross-check");

  sgp::cli::Options opts;
  std::vector<std::string> words;
  double budget = 0;
  const std::map<std::string, Format> formats{{"pretty", Format::pretty}, {"json", Format::json}, {"csv", Format::csv}};
  std::string format = "pretty";
  app.add_option("--format", format, "pretty (default), json or csv")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--max-order", opts.max_order, "refuse groups with more elements than this")->check(CLI::PositiveNumber);
  app.add_flag("--deep", opts.deep, "verify-paper: include the minutes-scale tier");
  app.add_flag("--full", opts.full, "verify-paper: include every tier");
  app.add_flag("--show-field", opts.show_field, "print the field modulus");
  app.add_option("--seed", opts.seed, "reserved; has no effect");
  auto* budget_opt = app.add_option("--time-budget", budget, "wall-clock limit in seconds")->check(CLI::PositiveNumber);
  app.add_option("command", words, "verb and arguments")->required();
  app.allow_extras(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : sgp::cli::kUsage;
  }
  opts.format = formats.at(format);
  if (budget_opt->count()) opts.time_budget_seconds = budget;
  return sgp::cli::run_words(words, opts, std::cout, std::cerr);
}
