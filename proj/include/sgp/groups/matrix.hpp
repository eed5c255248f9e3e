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

#ifndef SGP_GROUPS_MATRIX_HPP
#define SGP_GROUPS_MATRIX_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "sgp/gf/field.hpp"

namespace sgp::groups {

/// Packed group element. The meaning of the bits belongs to a Model.
using Code = std::uint64_t;

/// Square matrix of dimension 2 or 4 over a FieldCtx, row-major.
struct Mat {
  unsigned dim = 0;
  std::array<gf::FieldElem, 16> e{};

  gf::FieldElem& at(unsigned i, unsigned j) { return e[i * dim + j]; }
  gf::FieldElem at(unsigned i, unsigned j) const { return e[i * dim + j]; }
  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_identity(const gf::FieldCtx& f, unsigned dim);
Mat mat_zero(unsigned dim);
Mat mat_mul(const gf::FieldCtx& f, const Mat& a, const Mat& b);
Mat mat_add(const gf::FieldCtx& f, const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Mat> mat_inverse(const gf::FieldCtx& f, const Mat& a);
gf::FieldElem mat_det(const gf::FieldCtx& f, const Mat& a);
gf::FieldElem mat_trace(const gf::FieldCtx& f, const Mat& a);
/// Entrywise x -> x^(2^k).
Mat mat_frobenius(const gf::FieldCtx& f, const Mat& a, std::int64_t k);

/// The fixed Gram matrix of the symplectic form: antidiagonal identity.
Mat symplectic_gram(const gf::FieldCtx& f, unsigned dim);
/// M^T J M == J for the antidiagonal J.
bool is_symplectic(const gf::FieldCtx& f, const Mat& m);

/// Entry code: 0 for ZERO, log + 1 otherwise; bits_per_entry = e.
Code encode_mat(const Mat& m, unsigned bits_per_entry);
Mat decode_mat(Code c, unsigned dim, unsigned bits_per_entry);

}  // namespace sgp::groups

#endif  // SGP_GROUPS_MATRIX_HPP
