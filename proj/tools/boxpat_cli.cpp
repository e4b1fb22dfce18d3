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

// boxpat: statistics, transfer series, closed forms, verification targets,
// b-files and LEGO walls from the command line.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 parse error, 3 bound
// exceeded, 4 precondition violation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boxpat/json_io.hpp"
#include "boxpat/verify.hpp"

namespace {

using namespace boxpat;

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitBound = 3;
constexpr int kExitPrecondition = 4;

constexpr std::size_t kMaxOrder = 64;
constexpr int kMaxBfileTerms = 1000;

struct Options {
  bool json = false;

  std::string kind;
  std::string object;
  std::string statistic;
  int alphabet = 0;

  std::vector<std::string> system;
  std::size_t order = default_series_order();
  bool maxstat = false;

  std::string target;

  std::string sequence;
  int count = 0;

  int width = 0;
  int height = 0;
  std::vector<std::string> action;
};

int to_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid " + what + " '" + text + "'");
  }
  if (used != text.size()) throw ParseError("invalid " + what + " '" + text + "'");
  return v;
}

std::pair<int, int> two_ints(const std::string& args, const std::string& spec) {
  const auto comma = args.find(',');
  if (comma == std::string::npos) throw ParseError("expected l,k in '" + spec + "'");
  return {to_int(args.substr(0, comma), "l"), to_int(args.substr(comma + 1), "k")};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_stat(const Options& o) {
  int value = 0;
  const Statistic stat = Statistic::parse(o.statistic);
  if (o.kind == "perm") {
    value = evaluate(stat, Permutation::parse(o.object));
  } else if (o.kind == "sperm") {
    value = evaluate(stat, SignedPermutation::parse(o.object));
  } else if (o.kind == "word") {
    if (o.alphabet < 1) throw PreconditionViolation("word statistics need --alphabet l with l >= 1");
    value = evaluate(stat, Word::parse(o.object, o.alphabet));
  } else {
    throw ParseError("unknown object kind '" + o.kind + "'");
  }
  if (o.json) {
    print_json({{"kind", o.kind}, {"object", o.object}, {"statistic", stat.to_string()}, {"value", value}});
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

struct SystemSpec {
  std::string name;
  int alphabet = 0;
  int k = 0;
};

SystemSpec parse_system(const std::vector<std::string>& words) {
  if (words.empty()) throw ParseError("missing system spec");
  SystemSpec s{words[0]};
  const std::size_t arity = s.name == "box2" ? 2 : (s.name == "kbond" || s.name == "rect1k") ? 3 : 0;
  if (arity == 0) throw ParseError("unknown system '" + s.name + "'");
  if (words.size() != arity) throw ParseError("system '" + s.name + "' takes " + std::to_string(arity - 1) + " integers");
  s.alphabet = to_int(words[1], "l");
  if (arity == 3) s.k = to_int(words[2], "k");
  if (s.alphabet < 1 || (arity == 3 && s.k < 1)) throw PreconditionViolation("need l >= 1 and k >= 1");
  return s;
}

int cmd_series(const Options& o) {
  const SystemSpec s = parse_system(o.system);
  if (o.order > kMaxOrder) throw BoundExceeded("series order limited to " + std::to_string(kMaxOrder));
  const TSeries series = s.name == "kbond"    ? kbond_series(s.alphabet, s.k, o.order)
                         : s.name == "rect1k" ? rect1k_series(s.alphabet, s.k, o.order)
                                              : box2_series(s.alphabet, o.order);
  if (o.maxstat) {
    const auto values = maxstat_series(series);
    if (o.json) {
      print_json(to_json(values));
    } else {
      for (std::size_t n = 0; n < values.size(); ++n) std::cout << n << " " << to_decimal(values[n]) << "\n";
    }
    return 0;
  }
  if (o.json) {
    print_json(to_json(series));
    return 0;
  }
  const std::size_t w = std::to_string(series.order()).size();
  for (std::size_t n = 0; n <= series.order(); ++n)
    std::cout << "t^" << std::left << std::setw(static_cast<int>(w)) << n << "  " << series[n].to_string('x') << "\n";
  return 0;
}

int cmd_gf(const Options& o) {
  const SystemSpec s = parse_system(o.system);
  if (s.name == "box2")
    throw BoundExceeded("no closed form for the 2-box system; use series box2 l");
  const RationalGF gf = s.name == "kbond" ? kbond_gf(s.alphabet, s.k) : rect1k_gf(s.alphabet, s.k);
  if (o.maxstat) {
    const RationalT m = maxstat_gf(gf);
    if (o.json) {
      print_json(to_json(m));
    } else {
      std::cout << "num: " << m.num().to_string('t') << "\nden: " << m.den().to_string('t') << "\n";
    }
    return 0;
  }
  if (o.json) {
    print_json(to_json(gf));
  } else {
    std::cout << "num: " << gf.num().to_string() << "\nden: " << gf.den().to_string() << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> targets;
  if (o.target == "all") {
    targets = verify_targets();
  } else {
    const auto& known = verify_targets();
    if (std::find(known.begin(), known.end(), o.target) == known.end())
      throw ParseError("unknown verify target '" + o.target + "'");
    targets = {o.target};
  }
  bool all_pass = true;
  Json reports = Json::array();
  for (const auto& t : targets) {
    const Report r = verify_target(t);
    all_pass = all_pass && r.passed();
    if (o.json) {
      Json checks = Json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"status", c.note ? "note" : c.pass ? "pass" : "fail"}, {"detail", c.detail}});
      reports.push_back({{"target", r.target}, {"pass", r.passed()}, {"checks", std::move(checks)}});
      continue;
    }
    std::cout << r.target << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks) {
      std::cout << "  " << (c.note ? "NOTE" : c.pass ? "pass" : "FAIL") << "  " << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
  }
  if (o.json) print_json(reports);
  return all_pass ? 0 : kExitMismatch;
}

// Sequence values with their first index.
std::pair<int, std::vector<Integer>> bfile_values(const std::string& spec, int count) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const auto n = static_cast<std::size_t>(count);
  std::vector<Integer> v;
  if (colon == std::string::npos) {
    if (head == "hertzsprung") {
      for (std::size_t i = 0; i < n; ++i) v.push_back(hertzsprung_count(i));
      return {0, v};
    }
    if (head == "avoider-count") {
      for (std::size_t i = 0; i < n; ++i) v.push_back(avoider_count(i));
      return {0, v};
    }
    if (head == "one-bad-pair") {
      for (std::size_t i = 0; i < n; ++i) v.push_back(one_bad_pair_count(i));
      return {0, v};
    }
    if (head == "maxbox") {
      for (std::size_t i = 0; i < n; ++i) v.push_back(max_box_count(i));
      return {0, v};
    }
    if (head == "lego-walls") {
      for (int h = 1; h <= count; ++h) v.push_back(count_stable_walls(kLegoWidth, kLegoBricks, h));
      return {1, v};
    }
  } else if (count > 0) {
    const auto [l, k] = two_ints(args, spec);
    if (l < 1 || k < 1) throw PreconditionViolation("need l >= 1 and k >= 1");
    if (n - 1 > kMaxOrder) throw BoundExceeded("transfer sequences limited to " + std::to_string(kMaxOrder + 1) + " terms");
    if (head == "avoid-kbond") return {0, avoidance_series(l, k, n - 1)};
    if (head == "avoid-rect1k") return {0, rect1k_series(l, k, n - 1).at_x(0)};
    if (head == "maxstat-rect1k") return {0, maxstat_series(rect1k_series(l, k, n - 1))};
    if (head == "smooth") return {0, smooth_series(l, k, n - 1)};
  } else if (head == "avoid-kbond" || head == "avoid-rect1k" || head == "maxstat-rect1k" || head == "smooth") {
    return {0, {}};
  }
  throw ParseError("unknown sequence '" + spec + "'");
}

int cmd_bfile(const Options& o) {
  if (o.count < 0) throw PreconditionViolation("count must be nonnegative");
  if (o.count > kMaxBfileTerms) throw BoundExceeded("b-files limited to " + std::to_string(kMaxBfileTerms) + " terms");
  const auto [offset, values] = bfile_values(o.sequence, o.count);
  for (std::size_t i = 0; i < values.size(); ++i)
    std::cout << offset + static_cast<int>(i) << " " << to_decimal(values[i]) << "\n";
  return 0;
}

Json walls_json(const std::vector<LegoWall>& walls) {
  Json out = Json::array();
  for (const auto& w : walls) out.push_back(to_json(w));
  return out;
}

int cmd_lego(const Options& o) {
  if (o.action.empty()) throw ParseError("missing lego action");
  const std::string& action = o.action[0];
  const auto expect_args = [&](std::size_t n) {
    if (o.action.size() != n + 1)
      throw ParseError("lego " + action + " takes " + std::to_string(n) + " argument(s)");
  };
  if (o.height < 0) throw PreconditionViolation("height must be nonnegative");
  if (action == "count") {
    expect_args(0);
    const Integer c = count_stable_walls(o.width, kLegoBricks, o.height);
    if (o.json) {
      print_json({{"width", o.width}, {"height", o.height}, {"count", to_decimal(c)}});
    } else {
      std::cout << to_decimal(c) << "\n";
    }
    return 0;
  }
  if (action == "list") {
    expect_args(0);
    const auto rows = enumerate_row_configs(o.width, kLegoBricks);
    OracleBounds bounds;
    if (detail::ipow(static_cast<long>(rows.size()), o.height) > bounds.max_walls)
      throw BoundExceeded("wall listing limited to " + to_decimal(bounds.max_walls) + " stacks");
    std::vector<LegoWall> walls;
    for_each_word(static_cast<int>(rows.size()), o.height, [&](const Word& labels) {
      LegoWall wall{o.width, {}};
      for (int c : labels.letters()) wall.rows.push_back(rows[static_cast<std::size_t>(c - 1)]);
      if (wall.is_stable()) walls.push_back(std::move(wall));
    });
    if (o.json) {
      print_json(walls_json(walls));
    } else {
      for (std::size_t i = 0; i < walls.size(); ++i) std::cout << (i ? "\n" : "") << walls[i].to_string();
    }
    return 0;
  }
  if (action == "encode") {
    expect_args(1);
    const auto rows = enumerate_row_configs(o.width, kLegoBricks);
    const Word w = Word::parse(o.action[1], static_cast<int>(rows.size()));
    if (w.size() != o.height)
      throw PreconditionViolation("word length " + std::to_string(w.size()) + " differs from height " +
                                  std::to_string(o.height));
    const LegoWall wall = lego_encode(w, o.width, kLegoBricks);
    if (o.json) {
      print_json(to_json(wall));
    } else {
      std::cout << wall.to_string();
    }
    return 0;
  }
  if (action == "decode") {
    expect_args(1);
    std::ifstream in(o.action[1]);
    if (!in) throw ParseError("cannot read wall file '" + o.action[1] + "'");
    std::ostringstream text;
    text << in.rdbuf();
    const LegoWall wall = LegoWall::parse(text.str(), o.width);
    if (wall.height() != o.height)
      throw PreconditionViolation("wall has height " + std::to_string(wall.height()) + ", expected " +
                                  std::to_string(o.height));
    for (const auto& r : wall.rows)
      if (r.width() != o.width)
        throw PreconditionViolation("row " + r.to_string() + " does not have width " + std::to_string(o.width));
    const Word w = lego_decode(wall, kLegoBricks);
    if (o.json) {
      print_json({{"word", w.to_string()}});
    } else {
      std::cout << w.to_string() << "\n";
    }
    return 0;
  }
  throw ParseError("unknown lego action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern statistics, transfer series and closed forms"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");

  auto* stat = app.add_subcommand("stat", "evaluate a statistic on one object");
  stat->add_option("kind", o.kind, "perm, sperm or word")->required();
  stat->add_option("object", o.object, "the object, e.g. 214365 or -2,1,3,-4")->required();
  stat->add_option("statistic", o.statistic, "bond, box1, kbox:k, rect:a,b, kbond:k or badpairs")->required();
  stat->add_option("--alphabet", o.alphabet, "alphabet size for words");

  auto* series = app.add_subcommand("series", "distribution series of a transfer system");
  series->add_option("system", o.system, "kbond l k, rect1k l k or box2 l")->required();
  series->add_option("--order", o.order, "highest power of t")->capture_default_str();
  series->add_flag("--maxstat", o.maxstat, "print only objects whose statistic equals their length");

  auto* gf = app.add_subcommand("gf", "closed-form generating function");
  gf->add_option("system", o.system, "kbond l k or rect1k l k")->required();
  gf->add_flag("--maxstat", o.maxstat, "apply the maxstat transform");

  auto* verify = app.add_subcommand("verify", "recompute a published result");
  verify->add_option("target", o.target, "hardin-3, hardin-4, hardin-5, mathar, barker, riordan, flajolet, maxbox, fibonacci or all")
      ->required();

  auto* bfile = app.add_subcommand("bfile", "write a sequence in b-file format");
  bfile->add_option("sequence", o.sequence,
                    "hertzsprung, avoider-count, one-bad-pair, maxbox, lego-walls, avoid-kbond:l,k, "
                    "avoid-rect1k:l,k, maxstat-rect1k:l,k or smooth:l,k")
      ->required();
  bfile->add_option("count", o.count, "number of terms")->required();

  auto* lego = app.add_subcommand("lego", "stable walls with bricks 2, 3, 4");
  lego->add_option("width", o.width)->required();
  lego->add_option("height", o.height)->required();
  lego->add_option("action", o.action, "count, list, encode w or decode file")->required();

  for (auto* sub : {stat, series, gf, verify, bfile, lego}) sub->fallthrough();

  // A signed permutation such as -2,1,3,-4 looks like an option; rewrite it
  // with the equivalent trailing-apostrophe bars, 2',1,3,4'.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a.size() > 1 && a[0] == '-' && std::isdigit(static_cast<unsigned char>(a[1]))) {
      std::string out;
      for (const auto& token : split_commas(a))
        out += (out.empty() ? "" : ",") + (token.size() > 1 && token[0] == '-' ? token.substr(1) + "'" : token);
      a = out;
    }
    args.push_back(std::move(a));
  }

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*stat) return cmd_stat(o);
    if (*series) return cmd_series(o);
    if (*gf) return cmd_gf(o);
    if (*verify) return cmd_verify(o);
    if (*bfile) return cmd_bfile(o);
    if (*lego) return cmd_lego(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const DegreeExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const PreconditionViolation& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
