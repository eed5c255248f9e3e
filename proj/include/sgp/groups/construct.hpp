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

#ifndef SGP_GROUPS_CONSTRUCT_HPP
#define SGP_GROUPS_CONSTRUCT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sgp/groups/fingroup.hpp"
#include "sgp/groups/group_spec.hpp"

namespace sgp::groups {

struct NamedSubgroup {
  std::string label;
  GroupPtr group;
};

/// Builds the construction named by spec; see group_spec_names().
/// Stabilizer constructions enumerate their parent sp4:q first.
GroupPtr build_group(const GroupSpec& spec, const Limits& limits = {});
GroupPtr build_group(std::string_view spec, const Limits& limits = {});

/// Realizes spec as a subgroup of parent, in parent's element model
/// (e.g. ext-sp2q2:q inside sp4:q goes through the GF(q^2) = GF(q)^2 model).
GroupPtr build_in(const GroupSpec& spec, const FinGroup& parent, const Limits& limits = {});

/// One representative per applicable maximal-subgroup row for sp4:q,
/// q = 2^e with e > 1, in the order: parabolic-p, parabolic-q, wreath-sp2,
/// ext-sp2q2, sp4-sub (per prime divisor of e), so4+, so4-, sz (e odd).
std::vector<NamedSubgroup> maximal_subgroups_sp4(const FinGroup& sp4, const Limits& limits = {});

/// One representative of each conjugacy class of maximal subgroups of
/// S6 = Sp4(2): A6, S5, PGL2(5), S4xS2, S2wrS3, S3wrS2.
std::vector<NamedSubgroup> maximal_subgroups_s6(const FinGroup& s6);
/// Non-maximal proper subgroups of S6 used as negative controls:
/// A5 (point stabilizer in A6), C6, S4.
std::vector<NamedSubgroup> nonmaximal_subgroups_s6(const FinGroup& s6);
/// Image in sp4:2 of a permutation of {0..5} (even-weight-subset model).
Code s6_to_sp4(const FinGroup& s6, const std::vector<unsigned>& images);

/// Generating matrices used by the constructions (documented in docs/).
std::vector<Mat> sl2_generators(const gf::FieldCtx& f);
std::vector<Mat> sp4_generators(const gf::FieldCtx& f);
std::vector<Mat> wreath_generators(const gf::FieldCtx& f);
std::vector<Mat> suzuki_generators(const gf::FieldCtx& f);

/// Images in sp4:q of the generators of SL_2(q^2):2 via GF(q^2) = GF(q)^2.
std::vector<Mat> ext_sp2q2_embedded_generators(std::uint64_t q);

/// Quadratic forms polarizing to the antidiagonal Gram matrix:
/// plus type x1x4 + x2x3, minus type x1x4 + x2^2 + x2x3 + delta x3^2.
gf::FieldElem minus_type_delta(const gf::FieldCtx& f);
gf::FieldElem quadratic_form(const gf::FieldCtx& f, bool plus_type, const std::array<gf::FieldElem, 4>& x);

/// Symmetric group on n points (perm model).
GroupPtr symmetric_group(unsigned n);
/// Permutation group on n points generated by the given cycle products.
GroupPtr perm_group(std::string label, unsigned n, const std::vector<std::vector<std::vector<unsigned>>>& gens);
/// Dihedral group of order 8 on 4 points and the quaternion group in its
/// regular representation on 8 points.
GroupPtr dihedral8();
GroupPtr quaternion8();

}  // namespace sgp::groups

#endif  // SGP_GROUPS_CONSTRUCT_HPP
