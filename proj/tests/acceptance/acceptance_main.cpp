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

// Runs every acceptance criterion (all tiers) and prints one line each.

#include <iostream>

#include "sgp/cli/acceptance.hpp"

int main() {
  int failed = 0;
  sgp::cli::run_acceptance(sgp::cli::Tier::full, [&](const sgp::cli::CriterionResult& r) {
    std::cout << sgp::cli::format_result(r) << std::endl;
    if (!r.skipped && !r.passed) ++failed;
  });
  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
