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

#ifndef SGP_GELFAND_GELFAND_HPP
#define SGP_GELFAND_GELFAND_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgp/chartab/character.hpp"
#include "sgp/groups/fingroup.hpp"

namespace sgp::gelfand {

using exact::Rat;

enum class Verdict { sgp, not_sgp };
enum class Method { full_check, total_char_shortcut };
std::string to_string(Verdict v);
std::string to_string(Method m);

/// Offending pair: G-irreducible g_index restricted to H contains
/// H-irreducible h_index with the given multiplicity.
struct Witness {
  std::size_t g_index = 0;
  std::size_t h_index = 0;
  Rat g_degree;
  Rat h_degree;
  Rat multiplicity;
};

struct SgpVerdict {
  std::string g_label;
  std::string h_label;
  Verdict verdict = Verdict::sgp;
  Method method = Method::full_check;
  std::optional<Witness> witness;
};

/// {G, H, verdict, method, witness: {g_char_degree, h_char_degree, multiplicity} | null}
nlohmann::json to_json(const SgpVerdict& v);

struct MultiplicityCheck {
  bool multiplicity_free = true;
  std::optional<std::size_t> index;  // first irreducible with multiplicity >= 2
  Rat multiplicity;
};
/// Throws DomainError when some multiplicity is not a nonnegative integer.
MultiplicityCheck is_multiplicity_free(const chartab::Character& chi, const chartab::CharTable& t);

/// Restrict every G-irreducible to H and take inner products with every
/// H-irreducible; first multiplicity >= 2 in table order is the witness.
SgpVerdict is_strong_gelfand_pair(const chartab::CharTable& g, const chartab::CharTable& h);
/// Same verdict from inducing every H-irreducible to G.
SgpVerdict strong_gelfand_by_induction(const chartab::CharTable& g, const chartab::CharTable& h);
/// Trivial character of H induces multiplicity-free.
bool is_gelfand_pair(const chartab::CharTable& g, const chartab::CharTable& h);

enum class ShortcutResult { not_sgp, inconclusive };
/// not_sgp iff tau_h_degree < max_g_degree; never proves sgp.
ShortcutResult total_char_shortcut(const Rat& tau_h_degree, const Rat& max_g_degree);

Rat total_degree(const chartab::CharTable& t);
Rat max_degree(const chartab::CharTable& t);

struct ScanEntry {
  std::string label;
  std::uint64_t order = 0;
  Rat total_degree;
  SgpVerdict verdict;
};

struct ScanResult {
  std::string g_label;
  std::uint64_t g_order = 0;
  Rat g_total_degree;
  Rat g_max_degree;
  std::vector<ScanEntry> entries;
};

/// Verdicts for the maximal subgroups of sp4:q (q = 2: the six classes of
/// maximal subgroups of S6; q = 4: the seven rows of the maximal-subgroup
/// list). Shortcut first, full check otherwise. The callback, if set,
/// receives each entry as soon as it is decided.
ScanResult scan_maximal_sp4(std::uint64_t q, const groups::Limits& limits = {},
                            const std::function<void(const ScanEntry&)>& progress = {});
nlohmann::json to_json(const ScanResult& r);

/// Commutativity of the algebra spanned by H-class sums of G: for each
/// H-class representative g, #{(c, d) in C x D : cd = g} is symmetric in
/// the H-classes C, D. Needs |G| <= 20000.
bool schur_commutes(const groups::FinGroup& g, const groups::FinGroup& h, const groups::Limits& limits = {});

}  // namespace sgp::gelfand

#endif  // SGP_GELFAND_GELFAND_HPP
