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

#include "sgp/groups/construct.hpp"

#include <algorithm>
#include <array>

#include "sgp/error.hpp"

namespace sgp::groups {
namespace {

using gf::FieldCtx;
using gf::FieldElem;

Mat diag4(FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
  Mat m = mat_zero(4);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  m.at(3, 3) = d;
  return m;
}

Mat perm4(const FieldCtx& f, std::array<unsigned, 4> img) {
  Mat m = mat_zero(4);
  for (unsigned j = 0; j < 4; ++j) m.at(img[j], j) = f.one();
  return m;
}

std::vector<Code> encode_all(const MatrixModel& model, const std::vector<Mat>& mats) {
  std::vector<Code> out;
  for (const Mat& m : mats) {
    Code c = model.encode(m);
    if (c != model.identity() && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

const MatrixModel* matrix_model(const FinGroup& g, unsigned dim) {
  auto* mm = dynamic_cast<const MatrixModel*>(&g.model());
  if (mm == nullptr || mm->dim() != dim) return nullptr;
  return mm;
}

const MatrixModel& require_sp4_model(const FinGroup& g, std::uint64_t q) {
  const MatrixModel* mm = matrix_model(g, 4);
  if (mm == nullptr || mm->field()->order() != q)
    throw DomainError(g.label() + " does not live in 4x4 matrices over GF(" + std::to_string(q) + ")");
  return *mm;
}

FieldElem absolute_trace(const FieldCtx& f, FieldElem x) {
  FieldElem t = FieldElem::zero();
  for (unsigned i = 0; i < f.degree(); ++i) t = f.add(t, f.frobenius(x, i));
  return t;
}

std::array<FieldElem, 4> column(const Mat& m, unsigned j) {
  return {m.at(0, j), m.at(1, j), m.at(2, j), m.at(3, j)};
}

bool preserves_form(const FieldCtx& f, const Mat& m, bool plus_type) {
  for (unsigned j = 0; j < 4; ++j) {
    std::array<FieldElem, 4> unit{};
    unit[j] = f.one();
    if (quadratic_form(f, plus_type, column(m, j)) != quadratic_form(f, plus_type, unit)) return false;
  }
  return true;
}

bool stabilizes_point(const Mat& m) { return m.at(1, 0).is_zero() && m.at(2, 0).is_zero() && m.at(3, 0).is_zero(); }

bool stabilizes_line(const Mat& m) {
  return m.at(2, 0).is_zero() && m.at(3, 0).is_zero() && m.at(2, 1).is_zero() && m.at(3, 1).is_zero();
}

std::vector<Mat> embed_mats(const FieldCtx& small, const FieldCtx& big, const std::vector<Mat>& mats) {
  std::vector<Mat> out;
  for (const Mat& m : mats) {
    Mat r = m;
    for (auto& x : r.e)
      if (!x.is_zero()) x = gf::subfield_embed(small, big, x);
    out.push_back(r);
  }
  return out;
}

GroupPtr make_group(ModelPtr model, std::vector<Code> gens, const std::string& label, const Limits& limits) {
  return std::make_shared<const FinGroup>(FinGroup::generate(std::move(model), std::move(gens), label, limits));
}

GroupPtr build_sp4(std::uint64_t q, const std::string& label, const Limits& limits) {
  auto f = gf::field_of_size(q);
  auto model = std::make_shared<const MatrixModel>(f, 4);
  return make_group(model, encode_all(*model, sp4_generators(*f)), label, limits);
}

// v -> m F^t(v) on GF(q^2)^2 written in the GF(q)-basis (1,0), (w,0), (0,1), (0,w).
struct SemilinearFrame {
  gf::FieldPtr small, big;
  FieldElem omega;
  std::vector<std::array<FieldElem, 2>> coords;  // big element index -> (a, b) with a + b w

  explicit SemilinearFrame(std::uint64_t q) : small(gf::field_of_size(q)), big(gf::field_of_size(q * q)) {
    omega = big->gamma();
    coords.resize(big->order());
    for (std::uint32_t i = 0; i < q; ++i) {
      for (std::uint32_t j = 0; j < q; ++j) {
        FieldElem a = i == 0 ? FieldElem::zero() : FieldElem::from_log(i - 1);
        FieldElem b = j == 0 ? FieldElem::zero() : FieldElem::from_log(j - 1);
        FieldElem x = big->add(lift(a), big->mul(lift(b), omega));
        coords[index(x)] = {a, b};
      }
    }
  }
  static std::size_t index(FieldElem x) { return x.is_zero() ? 0 : x.log() + 1; }
  FieldElem lift(FieldElem a) const { return a.is_zero() ? a : gf::subfield_embed(*small, *big, a); }
  std::array<FieldElem, 2> vec(unsigned j) const {
    FieldElem x = j % 2 == 0 ? big->one() : omega;
    return j < 2 ? std::array<FieldElem, 2>{x, FieldElem::zero()} : std::array<FieldElem, 2>{FieldElem::zero(), x};
  }
  Mat realize(const Mat& m, bool twisted) const {
    Mat out = mat_zero(4);
    for (unsigned j = 0; j < 4; ++j) {
      auto v = vec(j);
      if (twisted)
        for (auto& x : v) x = big->frobenius(x, small->degree());
      FieldElem y0 = big->add(big->mul(m.at(0, 0), v[0]), big->mul(m.at(0, 1), v[1]));
      FieldElem y1 = big->add(big->mul(m.at(1, 0), v[0]), big->mul(m.at(1, 1), v[1]));
      auto c0 = coords[index(y0)];
      auto c1 = coords[index(y1)];
      out.at(0, j) = c0[0];
      out.at(1, j) = c0[1];
      out.at(2, j) = c1[0];
      out.at(3, j) = c1[1];
    }
    return out;
  }
  // Tr(u1 v2 + u2 v1) restricted to GF(q).
  Mat gram() const {
    Mat g = mat_zero(4);
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned j = 0; j < 4; ++j) {
        auto u = vec(i);
        auto v = vec(j);
        FieldElem s = big->add(big->mul(u[0], v[1]), big->mul(u[1], v[0]));
        FieldElem t = big->add(s, big->frobenius(s, small->degree()));
        g.at(i, j) = t.is_zero() ? t : gf::subfield_restrict(*small, *big, t);
      }
    }
    return g;
  }
};

using Vec4 = std::array<FieldElem, 4>;

FieldElem bilinear(const FieldCtx& f, const Mat& g, const Vec4& x, const Vec4& y) {
  FieldElem s = FieldElem::zero();
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) s = f.add(s, f.mul(x[i], f.mul(g.at(i, j), y[j])));
  return s;
}

Vec4 axpy(const FieldCtx& f, const Vec4& x, FieldElem a, const Vec4& y) {
  Vec4 r;
  for (unsigned i = 0; i < 4; ++i) r[i] = f.add(x[i], f.mul(a, y[i]));
  return r;
}

// Columns b1..b4 with B(b1, b4) = B(b2, b3) = 1 and all other pairings zero.
Mat symplectic_frame(const FieldCtx& f, const Mat& gram) {
  std::vector<Vec4> basis;
  for (unsigned i = 0; i < 4; ++i) {
    Vec4 v{};
    v[i] = f.one();
    basis.push_back(v);
  }
  auto hyperbolic_pair = [&](const std::vector<Vec4>& vs) -> std::pair<Vec4, Vec4> {
    for (const Vec4& u : vs)
      for (const Vec4& w : vs) {
        FieldElem b = bilinear(f, gram, u, w);
        if (!b.is_zero()) return {u, axpy(f, Vec4{}, f.inv(b), w)};
      }
    throw CrossCheckError("form is degenerate");
  };
  auto [b1, b4] = hyperbolic_pair(basis);
  std::vector<Vec4> rest;
  for (const Vec4& x : basis) {
    Vec4 y = axpy(f, x, bilinear(f, gram, x, b4), b1);
    y = axpy(f, y, bilinear(f, gram, x, b1), b4);
    rest.push_back(y);
  }
  auto [b2, b3] = hyperbolic_pair(rest);
  Mat t = mat_zero(4);
  const std::array<Vec4, 4> cols{b1, b2, b3, b4};
  for (unsigned j = 0; j < 4; ++j)
    for (unsigned i = 0; i < 4; ++i) t.at(i, j) = cols[j][i];
  return t;
}

GroupPtr build_ext_abstract(std::uint64_t q, const std::string& label, const Limits& limits) {
  auto big = gf::field_of_size(q * q);
  auto model = std::make_shared<const TwistedSl2Model>(big, gf::log2_exact(q));
  std::vector<Code> gens;
  for (const Mat& m : sl2_generators(*big)) gens.push_back(model->encode(m, false));
  gens.push_back(model->encode(mat_identity(*big, 2), true));
  return make_group(model, gens, label, limits);
}

GroupPtr stabilizer_in(const FinGroup& parent, const GroupSpec& spec) {
  const MatrixModel& mm = require_sp4_model(parent, spec.q());
  const FieldCtx& f = *mm.field();
  const std::string& n = spec.name;
  std::function<bool(Code)> keep;
  if (n == "parabolic-p") keep = [&](Code c) { return stabilizes_point(mm.decode(c)); };
  else if (n == "parabolic-q") keep = [&](Code c) { return stabilizes_line(mm.decode(c)); };
  else if (n == "so4+") keep = [&](Code c) { return preserves_form(f, mm.decode(c), true); };
  else keep = [&](Code c) { return preserves_form(f, mm.decode(c), false); };
  return subgroup_by_filter(parent, keep, spec.text);
}

bool is_stabilizer(const std::string& n) {
  return n == "parabolic-p" || n == "parabolic-q" || n == "so4+" || n == "so4-";
}

std::uint32_t qmul(std::uint32_t a, std::uint32_t b) {
  // Q8 element 2u + s for (-1)^s * unit[u], units 1, i, j, k.
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const unsigned prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const unsigned ua = a / 2, ub = b / 2;
  return 2 * prod[ua][ub] + ((a + b + sign[ua][ub]) & 1);
}

}  // namespace

FieldElem minus_type_delta(const FieldCtx& f) {
  for (std::uint32_t k = 0; k + 1 < f.order(); ++k) {
    FieldElem d = FieldElem::from_log(k);
    if (!absolute_trace(f, d).is_zero()) return d;
  }
  throw CrossCheckError("no element of absolute trace 1");
}

FieldElem quadratic_form(const FieldCtx& f, bool plus_type, const std::array<FieldElem, 4>& x) {
  FieldElem v = f.add(f.mul(x[0], x[3]), f.mul(x[1], x[2]));
  if (plus_type) return v;
  v = f.add(v, f.mul(x[1], x[1]));
  return f.add(v, f.mul(minus_type_delta(f), f.mul(x[2], x[2])));
}

std::vector<Mat> sl2_generators(const FieldCtx& f) {
  Mat lower = mat_identity(f, 2);
  lower.at(1, 0) = f.one();
  Mat upper = mat_identity(f, 2);
  upper.at(0, 1) = f.one();
  Mat torus = mat_zero(2);
  torus.at(0, 0) = f.gamma();
  torus.at(1, 1) = f.inv(f.gamma());
  return {lower, upper, torus};
}

std::vector<Mat> sp4_generators(const FieldCtx& f) {
  const FieldElem one = f.one(), g = f.gamma(), gi = f.inv(f.gamma());
  Mat long_root = mat_identity(f, 4);
  long_root.at(0, 3) = one;
  Mat short_root = mat_identity(f, 4);
  short_root.at(0, 1) = one;
  short_root.at(2, 3) = one;
  return {diag4(g, one, one, gi),        diag4(one, g, gi, one),       perm4(f, {3, 1, 2, 0}),
          perm4(f, {0, 2, 1, 3}),        perm4(f, {1, 0, 3, 2}),       long_root,
          short_root};
}

std::vector<Mat> wreath_generators(const FieldCtx& f) {
  std::vector<Mat> out;
  for (const Mat& m : sl2_generators(f)) {
    Mat r = mat_identity(f, 4);
    r.at(0, 0) = m.at(0, 0);
    r.at(0, 3) = m.at(0, 1);
    r.at(3, 0) = m.at(1, 0);
    r.at(3, 3) = m.at(1, 1);
    out.push_back(r);
  }
  out.push_back(perm4(f, {1, 0, 3, 2}));
  return out;
}

std::vector<Mat> suzuki_generators(const FieldCtx& f) {
  const unsigned e = f.degree();
  if (e % 2 == 0 || e < 3) throw DomainError("Suzuki groups need an odd field degree >= 3");
  const unsigned n = (e - 1) / 2;
  auto theta = [&](FieldElem x) { return f.frobenius(x, n + 1); };
  auto s = [&](FieldElem a, FieldElem b) {
    Mat m = mat_identity(f, 4);
    m.at(1, 0) = a;
    m.at(2, 0) = b;
    m.at(2, 1) = theta(a);
    m.at(3, 0) = f.add(f.add(f.mul(f.mul(a, a), theta(a)), f.mul(a, b)), theta(b));
    m.at(3, 1) = f.add(f.mul(a, theta(a)), b);
    m.at(3, 2) = a;
    return m;
  };
  const std::int64_t h = std::int64_t{1} << n;
  const FieldElem g = f.gamma();
  Mat torus = diag4(f.pow(g, 1 + h), f.pow(g, h), f.pow(g, -h), f.pow(g, -1 - h));
  return {s(f.one(), FieldElem::zero()), s(FieldElem::zero(), f.one()), s(g, FieldElem::zero()), torus,
          perm4(f, {3, 2, 1, 0})};
}

std::vector<Mat> ext_sp2q2_embedded_generators(std::uint64_t q) {
  SemilinearFrame frame(q);
  const FieldCtx& f = *frame.small;
  const Mat t = symplectic_frame(f, frame.gram());
  const Mat ti = *mat_inverse(f, t);
  std::vector<Mat> out;
  auto push = [&](const Mat& m, bool twisted) {
    Mat r = mat_mul(f, ti, mat_mul(f, frame.realize(m, twisted), t));
    if (!is_symplectic(f, r)) throw CrossCheckError("GF(q^2)-semilinear image is not symplectic");
    out.push_back(r);
  };
  for (const Mat& m : sl2_generators(*frame.big)) push(m, false);
  push(mat_identity(*frame.big, 2), true);
  return out;
}

GroupPtr build_group(std::string_view spec, const Limits& limits) { return build_group(parse_group_spec(spec), limits); }

GroupPtr build_group(const GroupSpec& spec, const Limits& limits) {
  limits.check_order(enumeration_order(spec), spec.text);
  const std::string& n = spec.name;
  const std::uint64_t q = spec.q();
  if (n == "trivial") {
    auto model = std::make_shared<const PermModel>(1);
    return make_group(model, {}, spec.text, limits);
  }
  if (n == "s6") return build_sp4(2, spec.text, limits);
  if (n == "sp4") return build_sp4(q, spec.text, limits);
  if (n == "ext-sp2q2") return build_ext_abstract(q, spec.text, limits);
  if (is_stabilizer(n)) {
    GroupPtr parent = build_sp4(q, "sp4:" + std::to_string(q), limits);
    return stabilizer_in(*parent, spec);
  }
  auto f = gf::field_of_size(q);
  if (n == "sl2") {
    auto model = std::make_shared<const MatrixModel>(f, 2);
    return make_group(model, encode_all(*model, sl2_generators(*f)), spec.text, limits);
  }
  auto model = std::make_shared<const MatrixModel>(f, 4);
  std::vector<Mat> gens;
  if (n == "wreath-sp2") gens = wreath_generators(*f);
  else if (n == "sz") gens = suzuki_generators(*f);
  else if (n == "sp4-sub") {
    auto small = gf::field_of_size(spec.args[1]);
    gens = embed_mats(*small, *f, sp4_generators(*small));
  } else
    throw DomainError("unknown group name '" + n + "'");
  return make_group(model, encode_all(*model, gens), spec.text, limits);
}

GroupPtr build_in(const GroupSpec& spec, const FinGroup& parent, const Limits& limits) {
  limits.check_time("subgroup construction");
  const std::string& n = spec.name;
  if (n == "trivial") return subgroup_generated(parent, {}, spec.text);
  if (n == "sl2") {
    if (auto* tw = dynamic_cast<const TwistedSl2Model*>(&parent.model());
        tw != nullptr && tw->field()->order() == spec.q()) {
      std::vector<Code> gens;
      for (const Mat& m : sl2_generators(*tw->field())) gens.push_back(tw->encode(m, false));
      return subgroup_generated(parent, gens, spec.text);
    }
  }
  if (const MatrixModel* mm = matrix_model(parent, 4); mm != nullptr && mm->field()->order() == spec.q()) {
    const FieldCtx& f = *mm->field();
    if (is_stabilizer(n)) return stabilizer_in(parent, spec);
    if (n == "ext-sp2q2") return subgroup_generated(parent, encode_all(*mm, ext_sp2q2_embedded_generators(spec.q())), spec.text);
    if (n == "wreath-sp2") return subgroup_generated(parent, encode_all(*mm, wreath_generators(f)), spec.text);
    if (n == "sz") return subgroup_generated(parent, encode_all(*mm, suzuki_generators(f)), spec.text);
    if (n == "sp4") return subgroup_generated(parent, encode_all(*mm, sp4_generators(f)), spec.text);
    if (n == "sp4-sub") {
      auto small = gf::field_of_size(spec.args[1]);
      return subgroup_generated(parent, encode_all(*mm, embed_mats(*small, f, sp4_generators(*small))), spec.text);
    }
  }
  if (n == "s6" && matrix_model(parent, 4) != nullptr && parent.model().field()->order() == 2)
    return subgroup_generated(parent, encode_all(*matrix_model(parent, 4), sp4_generators(*parent.model().field())),
                              spec.text);
  GroupPtr h = build_group(spec, limits);
  if (h->model().key() != parent.model().key())
    throw DomainError(spec.text + " has no realization inside " + parent.label() + " (models " + h->model().key() +
                      " and " + parent.model().key() + ")");
  require_subgroup(*h, parent);
  return h;
}

std::vector<NamedSubgroup> maximal_subgroups_sp4(const FinGroup& sp4, const Limits& limits) {
  const MatrixModel* mm = matrix_model(sp4, 4);
  if (mm == nullptr) throw DomainError(sp4.label() + " is not a 4x4 matrix group");
  const std::uint64_t q = mm->field()->order();
  const unsigned e = mm->field()->degree();
  if (e < 2) throw DomainError("the maximal-subgroup list applies to q = 2^e with e > 1");
  std::vector<std::string> specs{"parabolic-p", "parabolic-q", "wreath-sp2", "ext-sp2q2"};
  for (auto& s : specs) s += ":" + std::to_string(q);
  for (unsigned r = 2; r <= e; ++r) {
    bool prime = true;
    for (unsigned d = 2; d * d <= r; ++d) prime = prime && r % d != 0;
    if (prime && e % r == 0) specs.push_back("sp4-sub:" + std::to_string(q) + ":" + std::to_string(1u << (e / r)));
  }
  specs.push_back("so4+:" + std::to_string(q));
  specs.push_back("so4-:" + std::to_string(q));
  if (e % 2 == 1) specs.push_back("sz:" + std::to_string(q));
  std::vector<NamedSubgroup> out;
  for (const auto& s : specs) out.push_back({s, build_in(parse_group_spec(s), sp4, limits)});
  return out;
}

Code s6_to_sp4(const FinGroup& s6, const std::vector<unsigned>& images) {
  const MatrixModel* mm = matrix_model(s6, 4);
  if (mm == nullptr || mm->field()->order() != 2) throw DomainError(s6.label() + " is not realized as sp4:2");
  if (images.size() != 6) throw DomainError("expected a permutation of 6 points");
  const FieldCtx& f = *mm->field();
  auto act = [&](unsigned set) {
    unsigned r = 0;
    for (unsigned i = 0; i < 6; ++i)
      if (set >> i & 1) r |= 1u << images[i];
    return r;
  };
  auto form = [](unsigned x, unsigned y) { return static_cast<unsigned>(__builtin_popcount(x & y) & 1); };
  const std::array<unsigned, 4> basis{0b000011, 0b011000, 0b110000, 0b000110};
  Mat m = mat_zero(4);
  for (unsigned j = 0; j < 4; ++j) {
    unsigned v = act(basis[j]);
    for (unsigned i = 0; i < 4; ++i)
      if (form(v, basis[3 - i])) m.at(i, j) = f.one();
  }
  Code c = mm->encode(m);
  s6.require_index(c);
  return c;
}

namespace {

std::vector<unsigned> images_of(const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> img(6);
  for (unsigned i = 0; i < 6; ++i) img[i] = i;
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  return img;
}

std::vector<NamedSubgroup> s6_subgroups(const FinGroup& s6,
                                        const std::vector<std::pair<std::string, std::vector<std::vector<std::vector<unsigned>>>>>& table) {
  std::vector<NamedSubgroup> out;
  for (const auto& [label, gens] : table) {
    std::vector<Code> codes;
    for (const auto& g : gens) codes.push_back(s6_to_sp4(s6, images_of(g)));
    out.push_back({label, subgroup_generated(s6, codes, label)});
  }
  return out;
}

}  // namespace

std::vector<NamedSubgroup> maximal_subgroups_s6(const FinGroup& s6) {
  return s6_subgroups(s6, {
                              {"A6", {{{0, 1, 2}}, {{1, 2, 3, 4, 5}}}},
                              {"S5", {{{0, 1}}, {{0, 1, 2, 3, 4}}}},
                              {"PGL2(5)", {{{0, 1, 2, 3, 4}}, {{1, 2, 4, 3}}, {{0, 5}, {1, 4}}}},
                              {"S4xS2", {{{0, 1}}, {{0, 1, 2, 3}}, {{4, 5}}}},
                              {"S2wrS3", {{{0, 1}}, {{0, 2, 4}, {1, 3, 5}}, {{0, 2}, {1, 3}}}},
                              {"S3wrS2", {{{0, 1}}, {{0, 1, 2}}, {{0, 3}, {1, 4}, {2, 5}}}},
                          });
}

std::vector<NamedSubgroup> nonmaximal_subgroups_s6(const FinGroup& s6) {
  return s6_subgroups(s6, {
                              {"A5", {{{0, 1, 2}}, {{0, 1, 2, 3, 4}}}},
                              {"C6", {{{0, 1, 2, 3, 4, 5}}}},
                              {"S4", {{{0, 1}}, {{0, 1, 2, 3}}}},
                          });
}

GroupPtr symmetric_group(unsigned n) {
  auto model = std::make_shared<const PermModel>(n);
  std::vector<Code> gens;
  if (n >= 2) {
    gens.push_back(model->from_cycles({{0, 1}}));
    std::vector<unsigned> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = i;
    if (n > 2) gens.push_back(model->from_cycles({cyc}));
  }
  return make_group(model, gens, "S" + std::to_string(n), {});
}

GroupPtr perm_group(std::string label, unsigned n, const std::vector<std::vector<std::vector<unsigned>>>& gens) {
  auto model = std::make_shared<const PermModel>(n);
  std::vector<Code> codes;
  for (const auto& g : gens) codes.push_back(model->from_cycles(g));
  return make_group(model, codes, label, {});
}

GroupPtr dihedral8() { return perm_group("D8", 4, {{{0, 1, 2, 3}}, {{1, 3}}}); }

GroupPtr quaternion8() {
  auto model = std::make_shared<const PermModel>(8);
  std::vector<Code> gens;
  for (std::uint32_t u : {2u, 4u}) {
    std::vector<unsigned> img(8);
    for (std::uint32_t x = 0; x < 8; ++x) img[x] = qmul(x, u);
    gens.push_back(model->from_images(img));
  }
  return make_group(model, gens, "Q8", {});
}

}  // namespace sgp::groups
