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

#include "sgp/chartab/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sgp::chartab {
namespace {

std::string real_string(double x) {
  if (std::abs(x) < 5e-10) x = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string complex_string(std::complex<double> z) {
  std::string re = real_string(z.real());
  if (std::abs(z.imag()) < 5e-10) return re;
  std::string im = real_string(std::abs(z.imag()));
  return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

}  // namespace

nlohmann::json character_to_json(const Character& c) {
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : c.values) vals.push_back(v.to_string());
  return {{"label", c.label}, {"degree", c.degree().to_string()}, {"values", vals}};
}

nlohmann::json table_to_json(const CharTable& t) {
  const ClassSpace& s = *t.space;
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < s.class_count(); ++i)
    classes.push_back({{"rep", s.group().model().to_json(s.rep(i))},
                       {"size", s.class_size(i)},
                       {"element_order", s.classes().rep_orders[i]}});
  nlohmann::json irr = nlohmann::json::array();
  for (const auto& c : t.irreducibles) irr.push_back(character_to_json(c));
  return {{"group", s.label()}, {"order", s.order()}, {"classes", classes}, {"irreducibles", irr}};
}

std::string table_to_csv(const CharTable& t) {
  const ClassSpace& s = *t.space;
  std::ostringstream os;
  os << "# lossy: floating-point embedding E(N) -> exp(2 pi i / N)\n";
  os << "label";
  for (std::size_t i = 0; i < s.class_count(); ++i)
    os << ",c" << i + 1 << "(o" << s.classes().rep_orders[i] << ";s" << s.class_size(i) << ")";
  os << "\n";
  for (const auto& c : t.irreducibles) {
    os << c.label;
    for (const auto& v : c.values) os << "," << complex_string(v.to_complex());
    os << "\n";
  }
  return os.str();
}

std::string table_to_pretty(const CharTable& t) {
  const ClassSpace& s = *t.space;
  const std::size_t k = s.class_count();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""}, sizes{"size"}, orders{"order"};
  for (std::size_t i = 0; i < k; ++i) {
    head.push_back("c" + std::to_string(i + 1));
    sizes.push_back(std::to_string(s.class_size(i)));
    orders.push_back(std::to_string(s.classes().rep_orders[i]));
  }
  cells.push_back(head);
  cells.push_back(orders);
  cells.push_back(sizes);
  for (const auto& c : t.irreducibles) {
    std::vector<std::string> row{c.label};
    for (const auto& v : c.values) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(k + 1, 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  os << s.label() << "  order " << s.order() << "  classes " << k << "\n";
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - row[i].size(), ' ') << row[i];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace sgp::chartab
