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

#ifndef SGP_GROUPS_MODEL_HPP
#define SGP_GROUPS_MODEL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgp/groups/matrix.hpp"

namespace sgp::groups {

/// Element arithmetic for one family of packed group elements.
class Model {
 public:
  virtual ~Model() = default;

  virtual Code identity() const = 0;
  virtual Code multiply(Code a, Code b) const = 0;
  virtual Code inverse(Code a) const = 0;
  /// Stable description; two models with equal keys share element codes.
  virtual std::string key() const = 0;
  virtual nlohmann::json to_json(Code a) const = 0;

  /// The element as a matrix, when the model has a linear representation of it.
  virtual std::optional<Mat> matrix(Code) const { return std::nullopt; }
  /// Field of the matrix entries, if any.
  virtual gf::FieldPtr field() const { return nullptr; }

  Code conjugate(Code x, Code by) const { return multiply(inverse(by), multiply(x, by)); }
  Code power(Code x, std::uint64_t k) const;
  std::uint64_t element_order(Code x) const;
};

using ModelPtr = std::shared_ptr<const Model>;

/// dim x dim matrices over GF(2^e); needs dim^2 * e <= 64.
class MatrixModel final : public Model {
 public:
  MatrixModel(gf::FieldPtr field, unsigned dim);

  Code identity() const override { return identity_; }
  Code multiply(Code a, Code b) const override;
  Code inverse(Code a) const override;
  std::string key() const override;
  nlohmann::json to_json(Code a) const override;
  std::optional<Mat> matrix(Code a) const override { return decode(a); }
  gf::FieldPtr field() const override { return field_; }

  unsigned dim() const { return dim_; }
  Code encode(const Mat& m) const { return encode_mat(m, bits_); }
  Mat decode(Code c) const { return decode_mat(c, dim_, bits_); }

 private:
  gf::FieldPtr field_;
  unsigned dim_;
  unsigned bits_;
  Code identity_;
};

/// Pairs (m, t) with m in SL_2(Q), Q = 2^e, t in {0, 1}, multiplied as
/// (m1, t1)(m2, t2) = (m1 * F^t1(m2), t1 + t2) where F is the entrywise
/// field automorphism x -> x^(2^twist). Models SL_2(Q):2 with F an involution.
class TwistedSl2Model final : public Model {
 public:
  TwistedSl2Model(gf::FieldPtr field, unsigned twist);

  Code identity() const override { return identity_; }
  Code multiply(Code a, Code b) const override;
  Code inverse(Code a) const override;
  std::string key() const override;
  nlohmann::json to_json(Code a) const override;
  std::optional<Mat> matrix(Code a) const override;
  gf::FieldPtr field() const override { return field_; }

  Code encode(const Mat& m, bool twisted) const;
  Mat mat_part(Code c) const { return decode_mat(c & mat_mask_, 2, field_->degree()); }
  bool twisted(Code c) const { return (c >> (4 * field_->degree())) & 1; }
  unsigned twist() const { return twist_; }

 private:
  gf::FieldPtr field_;
  unsigned twist_;
  Code mat_mask_;
  Code identity_;
};

/// Permutations of {0, ..., n-1}, n <= 16, image of i in bits [4i, 4i+4).
class PermModel final : public Model {
 public:
  explicit PermModel(unsigned n);

  Code identity() const override { return identity_; }
  Code multiply(Code a, Code b) const override;
  Code inverse(Code a) const override;
  std::string key() const override { return "perm/" + std::to_string(n_); }
  nlohmann::json to_json(Code a) const override;

  unsigned degree() const { return n_; }
  unsigned image(Code p, unsigned i) const { return static_cast<unsigned>(p >> (4 * i) & 0xF); }
  Code from_images(const std::vector<unsigned>& images) const;
  /// Product of disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  Code from_cycles(const std::vector<std::vector<unsigned>>& cycles) const;

 private:
  unsigned n_;
  Code identity_;
};

}  // namespace sgp::groups

#endif  // SGP_GROUPS_MODEL_HPP
