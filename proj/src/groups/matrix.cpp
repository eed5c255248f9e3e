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

#include "sgp/groups/matrix.hpp"

#include "sgp/error.hpp"

namespace sgp::groups {

using gf::FieldCtx;
using gf::FieldElem;

Mat mat_zero(unsigned dim) {
  Mat m;
  m.dim = dim;
  return m;
}

Mat mat_identity(const FieldCtx& f, unsigned dim) {
  Mat m = mat_zero(dim);
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = f.one();
  return m;
}

Mat mat_mul(const FieldCtx& f, const Mat& a, const Mat& b) {
  const unsigned n = a.dim;
  Mat c = mat_zero(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      FieldElem s;
      for (unsigned k = 0; k < n; ++k) s = f.add(s, f.mul(a.e[i * n + k], b.e[k * n + j]));
      c.e[i * n + j] = s;
    }
  }
  return c;
}

Mat mat_add(const FieldCtx& f, const Mat& a, const Mat& b) {
  Mat c = mat_zero(a.dim);
  for (unsigned i = 0; i < a.dim * a.dim; ++i) c.e[i] = f.add(a.e[i], b.e[i]);
  return c;
}

Mat mat_transpose(const Mat& a) {
  Mat t = mat_zero(a.dim);
  for (unsigned i = 0; i < a.dim; ++i)
    for (unsigned j = 0; j < a.dim; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

std::optional<Mat> mat_inverse(const FieldCtx& f, const Mat& a) {
  const unsigned n = a.dim;
  Mat m = a;
  Mat r = mat_identity(f, n);
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (unsigned j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(r.at(piv, j), r.at(col, j));
      }
    }
    FieldElem inv = f.inv(m.at(col, col));
    for (unsigned j = 0; j < n; ++j) {
      m.at(col, j) = f.mul(m.at(col, j), inv);
      r.at(col, j) = f.mul(r.at(col, j), inv);
    }
    for (unsigned i = 0; i < n; ++i) {
      if (i == col || m.at(i, col).is_zero()) continue;
      FieldElem t = m.at(i, col);
      for (unsigned j = 0; j < n; ++j) {
        m.at(i, j) = f.add(m.at(i, j), f.mul(t, m.at(col, j)));
        r.at(i, j) = f.add(r.at(i, j), f.mul(t, r.at(col, j)));
      }
    }
  }
  return r;
}

FieldElem mat_det(const FieldCtx& f, const Mat& a) {
  const unsigned n = a.dim;
  Mat m = a;
  FieldElem det = f.one();
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && m.at(piv, col).is_zero()) ++piv;
    if (piv == n) return FieldElem::zero();
    if (piv != col)
      for (unsigned j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));  // sign is irrelevant in char 2
    det = f.mul(det, m.at(col, col));
    FieldElem inv = f.inv(m.at(col, col));
    for (unsigned i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      FieldElem t = f.mul(m.at(i, col), inv);
      for (unsigned j = col; j < n; ++j) m.at(i, j) = f.add(m.at(i, j), f.mul(t, m.at(col, j)));
    }
  }
  return det;
}

FieldElem mat_trace(const FieldCtx& f, const Mat& a) {
  FieldElem t;
  for (unsigned i = 0; i < a.dim; ++i) t = f.add(t, a.at(i, i));
  return t;
}

Mat mat_frobenius(const FieldCtx& f, const Mat& a, std::int64_t k) {
  Mat r = a;
  for (unsigned i = 0; i < a.dim * a.dim; ++i) r.e[i] = f.frobenius(a.e[i], k);
  return r;
}

Mat symplectic_gram(const FieldCtx& f, unsigned dim) {
  Mat j = mat_zero(dim);
  for (unsigned i = 0; i < dim; ++i) j.at(i, dim - 1 - i) = f.one();
  return j;
}

bool is_symplectic(const FieldCtx& f, const Mat& m) {
  Mat j = symplectic_gram(f, m.dim);
  return mat_mul(f, mat_mul(f, mat_transpose(m), j), m) == j;
}

Code encode_mat(const Mat& m, unsigned bits) {
  Code c = 0;
  for (unsigned i = 0; i < m.dim * m.dim; ++i) {
    Code v = m.e[i].is_zero() ? 0 : m.e[i].log() + 1;
    c |= v << (i * bits);
  }
  return c;
}

Mat decode_mat(Code c, unsigned dim, unsigned bits) {
  Mat m = mat_zero(dim);
  const Code mask = (Code{1} << bits) - 1;
  for (unsigned i = 0; i < dim * dim; ++i) {
    auto v = static_cast<std::uint32_t>(c >> (i * bits) & mask);
    m.e[i] = v == 0 ? FieldElem::zero() : FieldElem::from_log(v - 1);
  }
  return m;
}

}  // namespace sgp::groups
