/* Copyright 2026 The boxpat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

// JSON encodings. Integers are decimal strings so that no consumer loses
// precision.
//
//   IntPoly      ["c0", "c1", ...]                     lowest degree first
//   TSeries      [{"t_order": n, "coeffs": [...]}, ...]
//   BiPoly       {"a,b": "c", ...}                     c x^a t^b
//   RationalGF   {"num": BiPoly, "den": BiPoly}
//   RationalT    {"num": IntPoly, "den": IntPoly}      polynomials in t

#include <string>
#include <vector>

#include "json.hpp"

#include "boxpat/algebra/rational.hpp"
#include "boxpat/algebra/series.hpp"
#include "boxpat/bijections.hpp"
#include "boxpat/oracles.hpp"

namespace boxpat {

using Json = nlohmann::ordered_json;

inline Json to_json(const std::vector<Integer>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

inline Json to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_decimal(c));
  return out;
}

inline Json to_json(const TSeries& s) {
  Json out = Json::array();
  for (std::size_t n = 0; n <= s.order(); ++n)
    out.push_back({{"t_order", n}, {"coeffs", to_json(s[n])}});
  return out;
}

inline Json to_json(const BiPoly& p) {
  Json out = Json::object();
  for (int b = 0; b <= p.t_degree(); ++b) {
    const IntPoly& row = p.t_coeff(static_cast<std::size_t>(b));
    for (int a = 0; a <= row.degree(); ++a) {
      const Integer c = row[static_cast<std::size_t>(a)];
      if (c != 0) out[std::to_string(a) + "," + std::to_string(b)] = to_decimal(c);
    }
  }
  return out;
}

inline Json to_json(const RationalGF& gf) { return {{"num", to_json(gf.num())}, {"den", to_json(gf.den())}}; }

inline Json to_json(const RationalT& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

inline Json to_json(const Distribution& d) {
  return {{"kind", d.kind}, {"n", d.n}, {"statistic", d.statistic}, {"poly", to_json(d.poly)}};
}

inline Json to_json(const RowConfig& row) {
  Json seams = Json::array();
  for (int s : row.seams()) seams.push_back(s);
  return {{"bricks", row.bricks}, {"seams", std::move(seams)}};
}

inline Json to_json(const LegoWall& wall) {
  Json rows = Json::array();
  for (const auto& r : wall.rows) rows.push_back(to_json(r));
  return {{"width", wall.width}, {"rows", std::move(rows)}};
}

inline IntPoly int_poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& v : j) c.emplace_back(v.get<std::string>());
  return IntPoly(std::move(c));
}

inline BiPoly bipoly_from_json(const Json& j) {
  BiPoly out;
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("invalid monomial key '" + key + "'");
    const auto a = static_cast<std::size_t>(std::stoul(key.substr(0, comma)));
    const auto b = static_cast<std::size_t>(std::stoul(key.substr(comma + 1)));
    out += BiPoly::monomial(Integer(value.get<std::string>()), a, b);
  }
  return out;
}

inline RationalGF rational_gf_from_json(const Json& j) {
  return {bipoly_from_json(j.at("num")), bipoly_from_json(j.at("den"))};
}

}  // namespace boxpat
