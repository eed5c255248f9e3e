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

#ifndef SGP_FAMILIES_FAMILIES_HPP
#define SGP_FAMILIES_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgp/chartab/character.hpp"
#include "sgp/families/polyq.hpp"
#include "sgp/groups/matrix.hpp"

namespace sgp::families {

struct DegreeEntry {
  std::string label;
  PolyQ degree;
  PolyQ multiplicity;
};

struct DegreeRow {
  std::string label;
  Rat degree;
  Rat multiplicity;
};

/// Character degrees of a family of groups with multiplicities, as
/// polynomials in `variable` ("q", or "r" with q = r^2/2 for Suzuki groups).
struct DegreeSpec {
  std::string family;
  std::string variable = "q";
  std::vector<DegreeEntry> entries;
  /// Group order as a polynomial in the same variable.
  PolyQ order;
  std::string validity;
  unsigned min_exponent = 2;
  bool odd_exponent = false;

  /// Value of the variable at field size q; throws DomainError for invalid q.
  Rat variable_at(std::uint64_t q) const;
  PolyQ total_degree() const;
  PolyQ sum_of_squares() const;
  std::vector<DegreeRow> evaluate(std::uint64_t q) const;
  /// Every degree repeated by its multiplicity, ascending.
  std::vector<Rat> degree_multiset(std::uint64_t q) const;
  /// [[label, degree, multiplicity]] with polynomials as exponent -> coefficient maps.
  nlohmann::json to_json() const;
};

/// Throws DomainError unless q = 2^e with e >= min_e.
unsigned require_even_prime_power(std::uint64_t q, unsigned min_e, const std::string& what);

DegreeSpec sl2_degree_spec();
/// Wreath product SL_2(q) wr 2: 16 rows, split rows suffixed _1/_2.
DegreeSpec wreath_degree_spec();
/// SL_2(q^2):2 from the split/fuse rule.
DegreeSpec ext_degree_spec();
/// Sz(q), q = 2^(2n+1), in r = 2^(n+1).
DegreeSpec suzuki_degree_spec();

/// Labelled table of SL_2(q), q = 2^e >= 4, on the classes 1, c, a^t, b^m.
/// Values come from the closed formulas; space must be a conjugacy-class
/// space of a group isomorphic to SL_2(q) given as 2x2 matrices (plain or
/// inside the twisted SL_2(q):2 model).
chartab::CharTable sl2_table(std::uint64_t q, const chartab::SpacePtr& space);
/// Same on a freshly built sl2:q.
chartab::CharTable sl2_table(std::uint64_t q, const groups::Limits& limits = {});
/// Torus generator of order q + 1: smallest matrix code of that order in SL_2(q).
groups::Mat sl2_nonsplit_torus_generator(std::uint64_t q);

/// split iff (q^2 - 1) divides s(q + 1) or s(q - 1); 1 <= s <= (q^2 - 2)/2.
chartab::SplitFuse ext_split_rule(std::uint64_t q, std::uint64_t s);
/// q^4 + q^3 + q.
Rat ext_total_degree(std::uint64_t q);
/// 2^(n+1)(q - 1) - q(q - 1) + q^3 for q = 2^(2n+1).
Rat suzuki_total_degree(std::uint64_t q);

struct Sp4DegreeFacts {
  Rat total;
  std::optional<Rat> max;  // formula valid for q >= 4
};
PolyQ sp4_total_degree_poly();
PolyQ sp4_max_degree_poly();
Sp4DegreeFacts sp4_degree_facts(std::uint64_t q);

struct AlphaParams {
  std::uint64_t q;
  std::int64_t k, m, n;
};
/// Throws DomainError unless q = 2^e >= 4, 1 <= k, m, n <= q - 2, m != n and m + n != q - 1.
void validate(const AlphaParams& p);

struct AlphaSum {
  Rat cyclotomic;    // exact sum of alpha_jk alpha_jm alpha_jn over 1 <= j <= (q-2)/2
  Rat counting;      // c (q - 1) - 4
  unsigned zero_combinations;  // c = #{k + m + n, k + m - n, k - m + n, k - m - n = 0 mod q - 1}
};
/// Both evaluations; throws CrossCheckError when they disagree.
AlphaSum alpha_sum(const AlphaParams& p);
/// (3 + q + alpha_sum) / (q - 1); needs q > 5.
Rat parabolic_inner_product(const AlphaParams& p);

}  // namespace sgp::families

#endif  // SGP_FAMILIES_FAMILIES_HPP
