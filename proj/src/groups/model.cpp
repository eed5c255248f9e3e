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

#include "sgp/groups/model.hpp"

#include "sgp/error.hpp"

namespace sgp::groups {

using gf::FieldElem;

Code Model::power(Code x, std::uint64_t k) const {
  Code r = identity();
  Code b = x;
  while (k) {
    if (k & 1) r = multiply(r, b);
    b = multiply(b, b);
    k >>= 1;
  }
  return r;
}

std::uint64_t Model::element_order(Code x) const {
  const Code id = identity();
  std::uint64_t n = 1;
  for (Code y = x; y != id; y = multiply(y, x)) ++n;
  return n;
}

// Matrices ------------------------------------------------------------------

MatrixModel::MatrixModel(gf::FieldPtr field, unsigned dim) : field_(std::move(field)), dim_(dim), bits_(field_->degree()) {
  if (dim != 2 && dim != 4) throw DomainError("matrix dimension must be 2 or 4");
  if (dim * dim * bits_ > 64)
    throw DomainError("GF(" + std::to_string(field_->order()) + ") matrices of dimension " + std::to_string(dim) +
                      " do not fit the 64-bit element encoding");
  identity_ = encode(mat_identity(*field_, dim));
}

Code MatrixModel::multiply(Code a, Code b) const {
  const unsigned n = dim_, bits = bits_;
  const Code mask = (Code{1} << bits) - 1;
  const gf::FieldCtx& f = *field_;
  std::uint32_t la[16], lb[16];
  for (unsigned i = 0; i < n * n; ++i) {
    la[i] = static_cast<std::uint32_t>(a >> (i * bits) & mask);
    lb[i] = static_cast<std::uint32_t>(b >> (i * bits) & mask);
  }
  Code c = 0;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      FieldElem s;
      for (unsigned k = 0; k < n; ++k) {
        std::uint32_t x = la[i * n + k], y = lb[k * n + j];
        if (x && y) s = f.add(s, f.mul(FieldElem::from_log(x - 1), FieldElem::from_log(y - 1)));
      }
      if (!s.is_zero()) c |= Code{s.log() + 1} << ((i * n + j) * bits);
    }
  }
  return c;
}

Code MatrixModel::inverse(Code a) const {
  auto inv = mat_inverse(*field_, decode(a));
  if (!inv) throw DomainError("singular matrix has no inverse");
  return encode(*inv);
}

std::string MatrixModel::key() const {
  return "mat" + std::to_string(dim_) + "/GF(" + std::to_string(field_->order()) + ")";
}

nlohmann::json MatrixModel::to_json(Code a) const {
  Mat m = decode(a);
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned i = 0; i < dim_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (unsigned j = 0; j < dim_; ++j) {
      if (m.at(i, j).is_zero()) row.push_back(nullptr);
      else row.push_back(m.at(i, j).log());
    }
    rows.push_back(row);
  }
  return rows;
}

// Twisted SL_2 ---------------------------------------------------------------

TwistedSl2Model::TwistedSl2Model(gf::FieldPtr field, unsigned twist) : field_(std::move(field)), twist_(twist) {
  const unsigned e = field_->degree();
  if (4 * e + 1 > 64) throw DomainError("GF(" + std::to_string(field_->order()) + ") too large for the twisted model");
  if ((2 * twist) % e != 0) throw DomainError("twisting automorphism must be an involution");
  mat_mask_ = (Code{1} << (4 * e)) - 1;
  identity_ = encode(mat_identity(*field_, 2), false);
}

Code TwistedSl2Model::encode(const Mat& m, bool t) const {
  return encode_mat(m, field_->degree()) | (Code{t} << (4 * field_->degree()));
}

Code TwistedSl2Model::multiply(Code a, Code b) const {
  const gf::FieldCtx& f = *field_;
  Mat mb = mat_part(b);
  const bool ta = twisted(a);
  if (ta) mb = mat_frobenius(f, mb, twist_);
  return encode(mat_mul(f, mat_part(a), mb), ta != twisted(b));
}

Code TwistedSl2Model::inverse(Code a) const {
  const gf::FieldCtx& f = *field_;
  auto inv = mat_inverse(f, mat_part(a));
  if (!inv) throw DomainError("singular matrix has no inverse");
  const bool t = twisted(a);
  return encode(t ? mat_frobenius(f, *inv, twist_) : *inv, t);
}

std::string TwistedSl2Model::key() const {
  return "twisted-sl2/GF(" + std::to_string(field_->order()) + ")/" + std::to_string(twist_);
}

nlohmann::json TwistedSl2Model::to_json(Code a) const {
  Mat m = mat_part(a);
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned i = 0; i < 2; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (unsigned j = 0; j < 2; ++j) {
      if (m.at(i, j).is_zero()) row.push_back(nullptr);
      else row.push_back(m.at(i, j).log());
    }
    rows.push_back(row);
  }
  return {{"matrix", rows}, {"frobenius", twisted(a) ? 1 : 0}};
}

std::optional<Mat> TwistedSl2Model::matrix(Code a) const {
  if (twisted(a)) return std::nullopt;
  return mat_part(a);
}

// Permutations -----------------------------------------------------------------

PermModel::PermModel(unsigned n) : n_(n) {
  if (n < 1 || n > 16) throw DomainError("permutation degree must lie in [1, 16]");
  std::vector<unsigned> id(n);
  for (unsigned i = 0; i < n; ++i) id[i] = i;
  identity_ = from_images(id);
}

Code PermModel::from_images(const std::vector<unsigned>& images) const {
  if (images.size() != n_) throw DomainError("permutation has wrong degree");
  std::vector<bool> seen(n_, false);
  Code c = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if (images[i] >= n_ || seen[images[i]]) throw DomainError("not a permutation");
    seen[images[i]] = true;
    c |= Code{images[i]} << (4 * i);
  }
  return c;
}

Code PermModel::from_cycles(const std::vector<std::vector<unsigned>>& cycles) const {
  std::vector<unsigned> img(n_);
  for (unsigned i = 0; i < n_; ++i) img[i] = i;
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) img.at(cyc[k]) = cyc[(k + 1) % cyc.size()];
  return from_images(img);
}

// Left-to-right composition: apply a, then b.
Code PermModel::multiply(Code a, Code b) const {
  Code c = 0;
  for (unsigned i = 0; i < n_; ++i) c |= Code{image(b, image(a, i))} << (4 * i);
  return c;
}

Code PermModel::inverse(Code a) const {
  Code c = 0;
  for (unsigned i = 0; i < n_; ++i) c |= Code{i} << (4 * image(a, i));
  return c;
}

nlohmann::json PermModel::to_json(Code a) const {
  nlohmann::json img = nlohmann::json::array();
  for (unsigned i = 0; i < n_; ++i) img.push_back(image(a, i));
  return img;
}

}  // namespace sgp::groups
