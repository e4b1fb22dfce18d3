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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boxpat/algebra/int_poly.hpp"
#include "boxpat/errors.hpp"

/// \file
/// Reference data: integer sequences and closed forms used as golden values by
/// `boxpat verify` and the acceptance suite. Longer prefixes are always recomputed, never stored.

namespace boxpat::golden {

struct GoldenTable {
  std::string_view id;      // OEIS number where one is given, else a local name
  std::string_view source;  // what the stored list counts
  int offset;               // index of the first term
  std::vector<long long> terms;

  std::vector<Integer> values() const {
    std::vector<Integer> out;
    out.reserve(terms.size());
    for (long long v : terms) out.emplace_back(std::to_string(v));
    return out;
  }
};

inline const std::vector<GoldenTable>& tables() {
  static const std::vector<GoldenTable> kTables = {
      {"A002464", "permutations of [n] without bonds", 0,
       {1, 1, 0, 0, 2, 14, 90, 646, 5242, 47622, 479306, 5296790, 63779034}},
      {"signed-avoiders", "signed permutations avoiding i(i+1) and bar(i+1)bar(i)", 0,
       {1, 2, 6, 34, 262, 2562, 30278, 419234, 6651846, 118950658, 2366492038}},
      {"maxbox", "permutations of [n] with n occurrences of the 1-box pattern", 0,
       {1, 1, 2, 2, 8, 14, 54, 128, 498, 1426, 5736, 18814, 78886, 287296, 1258018}},
      {"avoid-box1-3", "words over [3] avoiding the 1-box pattern", 0, {1, 3, 2, 2, 2, 2, 2, 2, 2, 2}},
      {"A006355", "words over [4] avoiding the 1-box pattern", 0,
       {1, 4, 6, 10, 16, 26, 42, 68, 110, 178}},
      {"A118649", "words over [5] avoiding the 1-box pattern", 0,
       {1, 5, 12, 30, 74, 184, 456, 1132, 2808, 6968}},
      {"avoid-box1-6", "words over [6] avoiding the 1-box pattern", 0,
       {1, 6, 20, 68, 230, 780, 2642, 8954, 30338, 102804}},
      {"avoid-box1-7", "words over [7] avoiding the 1-box pattern", 0,
       {1, 7, 30, 130, 562, 2432, 10520, 45514, 196898, 851828}},
      {"avoid-rect12-4", "words over [4] avoiding the (1,2)-rectangle pattern", 0,
       {1, 4, 2, 2, 2, 2, 2, 2, 2, 2}},
      {"avoid-rect12-5", "words over [5] avoiding the (1,2)-rectangle pattern", 0,
       {1, 5, 6, 10, 16, 26, 42, 68, 110, 178}},
      {"A052994", "words over [6] avoiding the (1,2)-rectangle pattern", 0,
       {1, 6, 12, 28, 62, 140, 314, 706, 1586, 3564}},
      {"avoid-rect12-7", "words over [7] avoiding the (1,2)-rectangle pattern", 0,
       {1, 7, 20, 62, 186, 566, 1712, 5192, 15728, 47688}},
      {"A055099", "2-smooth words over [4]", 0,
       {1, 4, 14, 50, 178, 634, 2258, 8042, 28642, 102010}},
      {"A126392", "2-smooth words over [5]", 0,
       {1, 5, 19, 75, 295, 1161, 4569, 17981, 70763, 278483}},
      {"A126393", "2-smooth words over [6]", 0,
       {1, 6, 24, 100, 418, 1748, 7310, 30570, 127842, 534628}},
      {"A126394", "2-smooth words over [7]", 0,
       {1, 7, 29, 125, 543, 2363, 10287, 44787, 194995, 848979}},
      {"A221591", "words over [3] in which every letter matches the 1-box pattern", 0,
       {1, 0, 7, 17, 49, 139, 393, 1113, 3151, 8921}},
      {"A221569", "words over [4] in which every letter matches the 1-box pattern", 0,
       {1, 0, 10, 26, 100, 342, 1210, 4240, 14898, 52306}},
      {"A221592", "words over [5] in which every letter matches the 1-box pattern", 0,
       {1, 0, 13, 35, 169, 651, 2715, 11011, 45099, 184063}},
      {"maxstat-rect12-4", "words over [4] in which every letter matches the (1,2)-rectangle pattern", 0,
       {1, 0, 14, 50, 196, 766, 2986, 11648, 44343, 177218, 691252}},
      {"maxstat-rect12-5", "words over [5] in which every letter matches the (1,2)-rectangle pattern", 0,
       {1, 0, 19, 75, 361, 1689, 7915, 37107, 173937, 815345}},
      {"lego-walls", "stable walls of width 7 with bricks 2, 3, 4", 1,
       {5, 12, 30, 74, 184, 456, 1132, 2808}},
      {"avoid-rect12-5-series", "expansion of the (1,2)-rectangle avoidance function over [5]", 0,
       {1, 5, 6, 10, 16, 26, 42, 68, 110}},
  };
  return kTables;
}

inline const GoldenTable& table(std::string_view id) {
  for (const auto& t : tables())
    if (t.id == id) return t;
  throw PreconditionViolation("no golden table '" + std::string(id) + "'");
}

/// Closed forms and expansions in the expression syntax of parse_rational_gf.
/// Keys: kbond_gf:l,k and kbond_series:l,k (distribution of k-bonds),
/// kbond_avoid_gf:l,k (the same at x = 0), rect1k_gf:l,k and rect1k_series:l,k
/// (distribution of (1,k)-rectangle matches), maxstat_gf:l,k (words whose
/// every letter matches), smooth_gf:l,k, lego_walls_gf. Expansions run
/// through t^8. maxstat_gf:5,2 is the stored function for the (1,2) case at
/// l = 5; it coincides with maxstat_gf:5,1.
inline const std::map<std::string, std::string, std::less<>>& formulas() {
  static const std::map<std::string, std::string, std::less<>> kFormulas = {
    {"kbond_avoid_gf:3,1",
     "((1+2t-t^2)/(1-t))"},
    {"kbond_avoid_gf:4,1",
     "((1+3t+t^2)/(1-t-t^2))"},
    {"kbond_avoid_gf:4,2",
     "((1+3t-2t^2)/(1-t))"},
    {"kbond_avoid_gf:5,1",
     "((1+3t-2t^3)/(1-2t-2t^2+2t^3))"},
    {"kbond_avoid_gf:5,2",
     "((1+4t-t^3)/(1-t-t^2))"},
    {"kbond_avoid_gf:6,1",
     "((1+4t+3t^2-t^3)/(1-2t-5t^2+t^3))"},
    {"kbond_avoid_gf:6,2",
     "((1+4t-t^2-t^3)/(1-2t-t^2+t^3))"},
    {"kbond_avoid_gf:7,1",
     "((1+4t+2t^2-4t^3-t^4)/(1-3t-7t^2+5t^3+2t^4))"},
    {"kbond_avoid_gf:7,2",
     "((1+5t+2t^2-4t^3-2t^4)/(1-2t-4t^2+2t^3+2t^4))"},
    {"kbond_gf:3,1",
     "((1-2(x-1)t-(x-1)^2t^2)/(1-t-2xt-x(x-1)t^2))"},
    {"kbond_gf:4,1",
     "((1-3(x-1)t+(x-1)^2t^2)/(1-(3x+1)t+(x^2-1)t^2))"},
    {"kbond_gf:4,2",
     "((1-3t(-1+x)-2t^2(-1+x)^2)/(1-t-3tx-2t^2(-1+x)x))"},
    {"kbond_gf:5,1",
     "((1-3(x-1)t+2(x-1)^3t^3)/(1-(3x+2)t+2(x-1)t^2+2(x+1)(x-1)^2t^3))"},
    {"kbond_gf:5,2",
     "((1-4t(-1+x)+t^3(-1+x)^3)/(1+t^2(-1+x)+t^3(-1+x)^2x-t(1+4x)))"},
    {"kbond_gf:6,1",
     "((1-4(x-1)t+3(x-1)^2t^2+(x-1)^3t^3)/(1-2(2x+1)t+(3x^2+2x-5)t^2+(x+1)(x-1)^2t^3))"},
    {"kbond_gf:6,2",
     "((1-4t(-1+x)-t^2(-1+x)^2+t^3(-1+x)^3)/(1-t^2(-1+x)^2+t^3(-1+x)^2(1+x)-2t(1+2x)))"},
    {"kbond_gf:7,1",
     "((1-4(x-1)t+2(x-1)^2t^2+4(x-1)^3t^3-(x-1)^4t^4)/(1-(4x+3)t-(7-5x-2x^2)t^2+(4x+5)(x"
     "-1)^2t^3-(x+2)(x-1)^3t^4))"},
    {"kbond_gf:7,2",
     "((1-5t(-1+x)+2t^2(-1+x)^2+4t^3(-1+x)^3-2t^4(-1+x)^4)/(1-2t^4(-1+x)^3(1+x)+2t^3(-1"
     "+x)^2(1+2x)-t(2+5x)+2t^2(-2+x+x^2)))"},
    {"kbond_series:3,1",
     "1+3t+(2+7x)t^2+(2+8x+17x^2)t^3+(2+10x+28x^2+41x^3)t^4+(2+12x+42x^2+88x^3+99x^4)t^5"
     "+(2+14x+58x^2+154x^3+262x^4+239x^5)t^6+(2+16x+76x^2+240x^3+524x^4+752x^5+577x^6)t^7"
     "+(2+18x+96x^2+348x^3+908x^4+1692x^5+2104x^6+1393x^7)t^8"},
    {"kbond_series:4,1",
     "1+4t+2(3+5x)t^2+2(5+14x+13x^2)t^3+4(4+17x+26x^2+17x^3)t^4+2(13+72x+162x^2+176x^3"
     "+89x^4)t^5+2(21+145x+422x^2+662x^3+565x^4+233x^5)t^6+4(17+140x+503x^2+1016x^3"
     "+1239x^4+876x^5+305x^6)t^7+2(55+527x+2247x^2+5567x^3+8717x^4+8757x^5+5301x^6"
     "+1597x^7)t^8"},
    {"kbond_series:4,2",
     "1+4t+2(1+7x)t^2+2(1+6x+25x^2)t^3+2(1+7x+31x^2+89x^3)t^4+2(1+8x+42x^2+144x^3"
     "+317x^4)t^5+2(1+9x+54x^2+222x^3+633x^4+1129x^5)t^6+2(1+10x+67x^2+316x^3+1095x^4"
     "+2682x^5+4021x^6)t^7+2(1+11x+81x^2+427x^3+1707x^4+5145x^5+11075x^6+14321x^7)t^8"},
    {"kbond_series:5,1",
     "1+5t+(12+13x)t^2+5(6+12x+7x^2)t^3+(74+222x+234x^2+95x^3)t^4+(184+724x+1134x^2+824x^3"
     "+259x^4)t^5+(456+2236x+4574x^2+4902x^3+2750x^4+707x^5)t^6+(1132+6624x+16800x^2"
     "+23480x^3+19290x^4+8868x^5+1931x^6)t^7+(2808+19124x+57696x^2+99716x^3+106666x^4"
     "+71418x^5+27922x^6+5275x^7)t^8"},
    {"kbond_series:5,2",
     "1+5t+(6+19x)t^2+5(2+8x+15x^2)t^3+(16+88x+226x^2+295x^3)t^4+(26+176x+606x^2+1156x^3"
     "+1161x^4)t^5+(42+342x+1428x^2+3644x^3+5600x^4+4569x^5)t^6+(68+644x+3170x^2+9840x^3"
     "+20250x^4+26172x^5+17981x^6)t^7+(110+1190x+6708x^2+24456x^3+61446x^4+106686x^5"
     "+119266x^6+70763x^7)t^8"},
    {"kbond_series:6,1",
     "1+6t+4(5+4x)t^2+4(17+26x+11x^2)t^3+2(115+263x+209x^2+61x^3)t^4+4(195+590x+696x^2"
     "+378x^3+85x^4)t^5+2(1321+4987x+7742x^2+6218x^3+2585x^4+475x^5)t^6+2(4477+20230x"
     "+39031x^2+41156x^3+25211x^4+8534x^5+1329x^6)t^7+2(15169+79871x+183933x^2+240507x^3"
     "+193107x^4+95997x^5+27503x^6+3721x^7)t^8"},
    {"kbond_series:6,2",
     "1+6t+12(1+2x)t^2+4(7+22x+25x^2)t^3+(62+294x+522x^2+418x^3)t^4+4(35+214x+552x^2"
     "+706x^3+437x^4)t^5+2(157+1191x+3926x^2+7154x^3+7245x^4+3655x^5)t^6+(706+6364x"
     "+25702x^2+59624x^3+85166x^4+71804x^5+30570x^6)t^7+2(793+8295x+39525x^2+111571x^3"
     "+202491x^4+239637x^5+173575x^6+63921x^7)t^8"},
    {"kbond_series:7,1",
     "1+7t+(30+19x)t^2+(130+160x+53x^2)t^3+(562+1034x+656x^2+149x^3)t^4+(2432+5940x"
     "+5598x^2+2416x^3+421x^4)t^5+(10520+32068x+39942x^2+25526x^3+8400x^4+1193x^5)t^6"
     "+(45514+166236x+257634x^2+217088x^3+105512x^4+28172x^5+3387x^6)t^7+(196898+838274x"
     "+1553178x^2+1625554x^3+1039904x^4+409176x^5+92190x^6+9627x^7)t^8"},
    {"kbond_series:7,2",
     "1+7t+(20+29x)t^2+(62+156x+125x^2)t^3+(186+710x+962x^2+543x^3)t^4+(566+2820x+5658x^2"
     "+5400x^3+2363x^4)t^5+(1712+10648x+27710x^2+38526x^3+28766x^4+10287x^5)t^6+(5192"
     "+38520x+124086x^2+222928x^3+239930x^4+148100x^5+44787x^6)t^7+(15728+135852x"
     "+519888x^2+1149548x^3+1594738x^4+1409754x^5+744298x^6+194995x^7)t^8"},
    {"lego_walls_gf",
     "((1+3t-2t^3)/(1-2t-2t^2+2t^3))"},
    {"maxstat_gf:3,1",
     "((1-2t+5t^2+2t^3+t^4)/(1-2t-2t^2-t^3))"},
    {"maxstat_gf:4,1",
     "((1-3t+8t^2-3t^3+t^4)/(1-3t-2t^2+t^3-t^4))"},
    {"maxstat_gf:4,2",
     "((1-3t+11t^2+6t^3+4t^4)/(1-3t-3t^2-2t^3))"},
    {"maxstat_gf:5,1",
     "((1-3t+9t^2-4t^3+6t^4+4t^6)/(1-3t-4t^2-6t^4-4t^5-4t^6))"},
    {"maxstat_gf:5,2",
     "((1-3t+9t^2-4t^3+6t^4+4t^6)/(1-3t-4t^2-6t^4-4t^5-4t^6))"},
    {"rect1k_gf:3,1",
     "((1+2(1-x)t-(1+4x-5x^2)t^2+2x(1-x)^2t^3+x^2(1-x)^2t^4)/(1-(1+2x)t+2x(1-x)t^2+x^2(1"
     "-x)t^3))"},
    {"rect1k_gf:4,1",
     "((1+3(1-x)t+(1-9x+8x^2)t^2-3x(1-x)^2t^3+x^2(1-x)^2t^4)/(1-(1+3x)t-(1-3x+2x^2)t^2-x(3"
     "-4x+x^2)t^3-x^2(1-x)^2t^4))"},
    {"rect1k_gf:4,2",
     "((1-3t(-1+x)+6t^3(-1+x)^2x+4t^4(-1+x)^2x^2+t^2(2+9x-11x^2))/(1-t-3tx-3t^2(-1+x)x"
     "+2t^3(-1+x)x^2))"},
    {"rect1k_gf:5,1",
     "(1+3(1-x)t+9x(1-x)t^2-2(1-x)^2(1+2x)t^3+6x(1-x)^2(1+x)t^4-4(1-x)^3x^3t^6)/(1-(2+3x)t"
     "-(2-6x+4x^2)t^2-(-2-6x+8x^2)t^3-6(1-x)^2x(1+x)t^4-4(1-x)^2x^3t^5+4(1-x)^3x^3t^6)"},
    {"rect1k_gf:5,2",
     "-((1+t(-1+x)(-4+t(16x+t(-1+x)(-1+x(-2+t^3(-1+x)x^2+4t(1+x))))))/(-1+t(1+4x+t(-1+x)("
     "-1+x(3+t^3(-1+x)x^2+t(4+x))))))"},
    {"rect1k_series:3,1",
     "1+3t+(2+7x^2)t^2+(2+8x^2+17x^3)t^3+(2+10x^2+20x^3+49x^4)t^4+(2+12x^2+26x^3+64x^4"
     "+139x^5)t^5+(2+14x^2+32x^3+88x^4+200x^5+393x^6)t^6+(2+16x^2+38x^3+114x^4+290x^5"
     "+614x^6+1113x^7)t^7+(2+18x^2+44x^3+142x^4+392x^5+932x^6+1880x^7+3151x^8)t^8"},
    {"rect1k_series:4,1",
     "1+4t+(6+10x^2)t^2+(10+28x^2+26x^3)t^3+(16+68x^2+72x^3+100x^4)t^4+(26+144x^2+174x^3"
     "+338x^4+342x^5)t^5+(42+290x^2+368x^3+930x^4+1256x^5+1210x^6)t^6+(68+560x^2+740x^3"
     "+2232x^4+3612x^5+4932x^6+4240x^7)t^7+(110+1054x^2+1428x^3+4996x^4+8984x^5+15246x^6"
     "+18820x^7+14898x^8)t^8"},
    {"rect1k_series:4,2",
     "1+4t+2(1+7x^2)t^2+2(1+6x^2+25x^3)t^3+2(1+7x^2+22x^3+98x^4)t^4+2(1+8x^2+27x^3+93x^4"
     "+383x^5)t^5+2(1+9x^2+32x^3+117x^4+396x^5+1493x^6)t^6+2(1+10x^2+37x^3+142x^4+519x^5"
     "+1659x^6+5824x^7)t^7+2(1+11x^2+42x^3+168x^4+652x^5+2247x^6+6930x^7+22717x^8)t^8"},
    {"rect1k_series:5,1",
     "1+5t+(12+13x^2)t^2+5(6+12x^2+7x^3)t^3+(74+222x^2+160x^3+169x^4)t^4+(184+724x^2"
     "+592x^3+974x^4+651x^5)t^5+(456+2236x^2+1932x^3+4238x^4+4048x^5+2715x^6)t^6+(1132"
     "+6624x^2+5968x^3+16036x^4+18372x^5+18982x^6+11011x^7)t^7+(2808+19124x^2+17688x^3"
     "+56072x^4+71724x^5+94282x^6+83828x^7+45099x^8)t^8"},
    {"rect1k_series:5,2",
     "1+5t+(6+19x^2)t^2+5(2+8x^2+15x^3)t^3+(16+88x^2+160x^3+361x^4)t^4+(26+176x^2+358x^3"
     "+876x^4+1689x^5)t^5+(42+342x^2+724x^3+2106x^4+4496x^5+7915x^6)t^6+(68+644x^2+1416x^3"
     "+4586x^4+11328x^5+22976x^6+37107x^7)t^7+(110+1190x^2+2680x^3+9562x^4+25712x^5"
     "+60762x^6+116672x^7+173937x^8)t^8"},
    {"smooth_gf:4,2",
     "((1+t)/(1-3t-2t^2))"},
    {"smooth_gf:5,2",
     "((1+t-t^2)/(1-4t+t^3))"},
    {"smooth_gf:6,2",
     "((1+2t-t^2-t^3)/(1-4t-t^2+t^3))"},
    {"smooth_gf:7,2",
     "((1+2t-4t^2-2t^3+2t^4)/(1-5t+2t^2+4t^3-2t^4))"},
  };
  return kFormulas;
}

inline const std::string& formula(std::string_view key) {
  const auto it = formulas().find(key);
  if (it == formulas().end()) throw PreconditionViolation("no golden formula '" + std::string(key) + "'");
  return it->second;
}

/// A linear recurrence as stated alongside a reference sequence:
/// b_n = sum_i coeffs[i-1] b_{n-i} for n > valid_from.
struct StatedRecurrence {
  std::string_view sequence_id;
  std::vector<long> coeffs;
  int valid_from;
};

inline const std::vector<StatedRecurrence>& stated_recurrences() {
  static const std::vector<StatedRecurrence> kRecurrences = {
      {"A221591", {2, 2, 1}, 4},
      {"A221569", {3, 2, -1, 1}, 5},
      {"A221592", {3, 4, 0, 6, 6, 5}, 6},
  };
  return kRecurrences;
}

/// 1-box avoiders over [4] and their binary images, lengths 2 and 3.
inline const std::vector<std::pair<std::string_view, std::string_view>>& binary_map_table() {
  static const std::vector<std::pair<std::string_view, std::string_view>> kMap = {
      {"13", "00011"},   {"14", "00000"},   {"24", "00111"},   {"31", "11000"},
      {"41", "11111"},   {"42", "11100"},   {"131", "000111"}, {"141", "000000"},
      {"142", "000011"}, {"241", "001111"}, {"242", "001100"}, {"313", "110011"},
      {"314", "110000"}, {"413", "111100"}, {"414", "111111"}, {"424", "111000"},
  };
  return kMap;
}

struct PermStatRow {
  std::string_view perm;
  int box1;
  int bond;
};

/// The 1-box count and bond count of every permutation of length 2, 3, 4.
inline const std::vector<PermStatRow>& small_perm_table() {
  static const std::vector<PermStatRow> kRows = {
      {"12", 2, 1},   {"21", 2, 1},   {"123", 3, 2},  {"132", 2, 1},  {"213", 2, 1},
      {"231", 2, 1},  {"312", 2, 1},  {"321", 3, 2},  {"1234", 4, 3}, {"1243", 4, 2},
      {"1324", 2, 1}, {"1342", 2, 1}, {"1423", 2, 1}, {"1432", 3, 2}, {"3124", 2, 1},
      {"3142", 0, 0}, {"3214", 3, 2}, {"3241", 2, 1}, {"3412", 4, 2}, {"3421", 4, 2},
      {"2134", 4, 2}, {"2143", 4, 2}, {"2314", 2, 1}, {"2341", 3, 2}, {"2413", 0, 0},
      {"2431", 2, 1}, {"4123", 3, 2}, {"4132", 2, 1}, {"4213", 2, 1}, {"4231", 2, 1},
      {"4312", 4, 2}, {"4321", 4, 3},
  };
  return kRows;
}

}  // namespace boxpat::golden
