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

#ifndef SGP_CLI_ACCEPTANCE_HPP
#define SGP_CLI_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace sgp::cli {

enum class Tier { basic = 1, deep = 2, full = 3 };

struct CriterionResult {
  int id = 0;
  std::string title;
  Tier tier = Tier::basic;
  bool skipped = false;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
};

/// One-line report: "[PASS] 3  title  (1.2 s / 60 s)  detail".
std::string format_result(const CriterionResult& r);

/// Runs acceptance criteria 1-10; criteria above `tier` are reported as
/// skipped. A criterion passes when every exact check holds and it finished
/// within its runtime budget.
std::vector<CriterionResult> run_acceptance(Tier tier,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace sgp::cli

#endif  // SGP_CLI_ACCEPTANCE_HPP
