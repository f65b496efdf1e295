// Copyright 2026 The Anglekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Subcommands: classify, sum, triangle, fuzz,
// render. Exit codes: 0 success, 1 fuzz campaign found non-fragile
// disagreements, 2 parse/usage error, 3 domain error (zero vector,
// duplicate points, residual too large), 4 internal contradiction.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "anglekit/angles.hpp"
#include "anglekit/exact.hpp"
#include "anglekit/harness.hpp"
#include "anglekit/svg_render.hpp"
#include "anglekit/triangle.hpp"

namespace {

using anglekit::FloatVec2;
using anglekit::Rational;
using anglekit::RationalVec2;
using json = nlohmann::json;

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string fmt_angle(double v, bool in_pi_multiples) {
  if (in_pi_multiples) return fmt15(v / anglekit::kPi) + " pi";
  return fmt15(v);
}

std::string slurp(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Rational coordinate_from_json(const json& v) {
  if (v.is_string()) return anglekit::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    return anglekit::make_rational(v.get<std::int64_t>());
  }
  if (v.is_number_float()) return Rational(v.get<double>());
  throw anglekit::ParseError("coordinate must be a number or rational string");
}

std::vector<RationalVec2> pairs_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    // Covers malformed text and numbers outside the double range alike.
    throw anglekit::ParseError(std::string("invalid JSON input: ") + e.what());
  }
  if (!doc.is_array()) {
    throw anglekit::ParseError("expected a JSON array of [x, y] pairs");
  }
  std::vector<RationalVec2> out;
  for (const json& pair : doc) {
    if (!pair.is_array() || pair.size() != 2) {
      throw anglekit::ParseError("each entry must be an [x, y] pair");
    }
    out.push_back({coordinate_from_json(pair[0]), coordinate_from_json(pair[1])});
  }
  return out;
}

RationalVec2 pair_from_token(const std::string& token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos || token.find(',', comma + 1) != std::string::npos) {
    throw anglekit::ParseError("expected \"x,y\", got \"" + token + "\"");
  }
  return {anglekit::parse_rational(token.substr(0, comma)),
          anglekit::parse_rational(token.substr(comma + 1))};
}

std::vector<RationalVec2> pairs_from_text(const std::string& text) {
  std::vector<RationalVec2> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(pair_from_token(token));
  return out;
}

std::vector<RationalVec2> pairs_from_any(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    return pairs_from_json(text);
  }
  return pairs_from_text(text);
}

// Inline tokens take priority, then --file, then stdin.
std::vector<RationalVec2> gather_pairs(const std::vector<std::string>& tokens,
                                       const std::string& file) {
  if (!tokens.empty()) {
    std::vector<RationalVec2> out;
    for (const std::string& t : tokens) {
      for (const RationalVec2& v : pairs_from_any(t)) out.push_back(v);
    }
    return out;
  }
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw anglekit::ParseError("cannot open input file: " + file);
    return pairs_from_any(slurp(in));
  }
  return pairs_from_any(slurp(std::cin));
}

std::vector<RationalVec2> gather_exactly_three(
    const std::vector<std::string>& tokens, const std::string& file,
    const char* what) {
  auto pairs = gather_pairs(tokens, file);
  if (pairs.size() != 3) {
    throw anglekit::ParseError(std::string("expected exactly three ") + what);
  }
  return pairs;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

struct CommonArgs {
  std::vector<std::string> tokens;
  std::string file;
  bool as_json = false;
  bool pi_multiples = false;
};

void add_input_options(CLI::App* cmd, CommonArgs* args, const char* what) {
  cmd->add_option("input", args->tokens, what);
  cmd->add_option("--file", args->file, "read input from a file instead");
  cmd->allow_extras();  // tolerate tokens that begin with '-'
}

void merge_extras(CLI::App* cmd, CommonArgs* args) {
  for (const std::string& extra : cmd->remaining()) {
    args->tokens.push_back(extra);
  }
}

int cmd_classify(const CommonArgs& args) {
  const auto v = gather_exactly_three(args.tokens, args.file, "vectors");
  const anglekit::TripleAlternative alt =
      anglekit::classify_triple(v[0], v[1], v[2]);
  const bool two_pi = alt != anglekit::TripleAlternative::Neither;
  if (args.as_json) {
    json j;
    j["alternative"] = anglekit::to_cstring(alt);
    j["turning_sum_is_two_pi"] = two_pi;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "alternative: " << anglekit::to_cstring(alt) << "\n"
              << "turning_sum_is_two_pi: " << (two_pi ? "true" : "false")
              << "\n";
  }
  return 0;
}

int cmd_sum(const CommonArgs& args) {
  const auto v = gather_exactly_three(args.tokens, args.file, "vectors");
  const FloatVec2 a = anglekit::to_float(v[0]);
  const FloatVec2 b = anglekit::to_float(v[1]);
  const FloatVec2 c = anglekit::to_float(v[2]);
  const double oab = anglekit::oriented_angle(a, b).rad();
  const double obc = anglekit::oriented_angle(b, c).rad();
  const double oca = anglekit::oriented_angle(c, a).rad();
  const double tab = anglekit::turning_angle(a, b).rad();
  const double tbc = anglekit::turning_angle(b, c).rad();
  const double tca = anglekit::turning_angle(c, a).rad();
  const double tsum = anglekit::turning_sum(a, b, c).rad();
  const int multiple = anglekit::oriented_sum_multiple(a, b, c);
  if (args.as_json) {
    json j;
    j["oriented"] = {{"ab", oab}, {"bc", obc}, {"ca", oca}};
    j["turning"] = {{"ab", tab}, {"bc", tbc}, {"ca", tca}};
    j["turning_sum"] = tsum;
    j["multiple"] = multiple;
    std::cout << j.dump(2) << "\n";
  } else {
    const bool pi = args.pi_multiples;
    std::cout << "oriented_angle(a,b): " << fmt_angle(oab, pi) << "\n"
              << "oriented_angle(b,c): " << fmt_angle(obc, pi) << "\n"
              << "oriented_angle(c,a): " << fmt_angle(oca, pi) << "\n"
              << "turning_angle(a,b): " << fmt_angle(tab, pi) << "\n"
              << "turning_angle(b,c): " << fmt_angle(tbc, pi) << "\n"
              << "turning_angle(c,a): " << fmt_angle(tca, pi) << "\n"
              << "turning_sum: " << fmt_angle(tsum, pi) << "\n"
              << "multiple: " << multiple << "\n";
  }
  return 0;
}

int cmd_triangle(const CommonArgs& args) {
  const auto p = gather_exactly_three(args.tokens, args.file, "points");
  // Distinctness is decided on the exact coordinates; the float path then
  // re-checks its own (converted) values.
  (void)anglekit::side_vectors(anglekit::RationalPoint2{p[0].x, p[0].y},
                               anglekit::RationalPoint2{p[1].x, p[1].y},
                               anglekit::RationalPoint2{p[2].x, p[2].y});
  const FloatVec2 f0 = anglekit::to_float(p[0]);
  const FloatVec2 f1 = anglekit::to_float(p[1]);
  const FloatVec2 f2 = anglekit::to_float(p[2]);
  const anglekit::TriangleAngles angles = anglekit::interior_angles(
      {f0.x, f0.y}, {f1.x, f1.y}, {f2.x, f2.y});
  if (args.as_json) {
    json j;
    j["angles"] = {angles.alpha0.rad(), angles.alpha1.rad(),
                   angles.alpha2.rad()};
    j["sum"] = angles.sum().rad();
    std::cout << j.dump(2) << "\n";
  } else {
    const bool pi = args.pi_multiples;
    std::cout << "alpha0: " << fmt_angle(angles.alpha0.rad(), pi) << "\n"
              << "alpha1: " << fmt_angle(angles.alpha1.rad(), pi) << "\n"
              << "alpha2: " << fmt_angle(angles.alpha2.rad(), pi) << "\n"
              << "sum: " << fmt_angle(angles.sum().rad(), pi) << "\n";
  }
  return 0;
}

struct FuzzArgs {
  anglekit::SampleSpec spec;
  std::string mode_name = "uniform";
  double tol = anglekit::kAngleTol;
  std::string out_path;
};

int cmd_fuzz(FuzzArgs& args) {
  args.spec.mode = anglekit::parse_sample_mode(args.mode_name);
  args.spec.validate();
  const anglekit::HarnessReport report = anglekit::run_campaign(args.spec, args.tol);
  emit(anglekit::report_to_json(report), args.out_path);
  return report.passing() ? 0 : 1;
}

struct RenderArgs {
  CommonArgs common;
  std::string out_path;
};

int cmd_render(const RenderArgs& args) {
  const auto v =
      gather_exactly_three(args.common.tokens, args.common.file, "vectors");
  const std::string svg = anglekit::render_triple_svg(
      anglekit::to_float(v[0]), anglekit::to_float(v[1]),
      anglekit::to_float(v[2]));
  emit(svg, args.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Planar angle measures, exact full-turn predicates, triangle angle "
      "sums, differential fuzzing, and SVG figures."};
  app.require_subcommand(1);

  CommonArgs classify_args;
  CLI::App* classify = app.add_subcommand(
      "classify", "decide exactly whether the turning angles sum to 2*pi");
  add_input_options(classify, &classify_args, "three vectors, \"x,y\" each");
  classify->add_flag("--json", classify_args.as_json, "JSON output");

  CommonArgs sum_args;
  CLI::App* sum = app.add_subcommand(
      "sum", "oriented and turning angles, their sum, and the 2*pi multiple");
  add_input_options(sum, &sum_args, "three vectors, \"x,y\" each");
  sum->add_flag("--json", sum_args.as_json, "JSON output");
  sum->add_flag("--pi", sum_args.pi_multiples, "print angles as multiples of pi");

  CommonArgs triangle_args;
  CLI::App* triangle =
      app.add_subcommand("triangle", "interior angles and their sum");
  add_input_options(triangle, &triangle_args, "three points, \"x,y\" each");
  triangle->add_flag("--json", triangle_args.as_json, "JSON output");
  triangle->add_flag("--pi", triangle_args.pi_multiples,
                     "print angles as multiples of pi");

  FuzzArgs fuzz_args;
  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "differential campaign: exact predicate vs float turning sum");
  fuzz->add_option("--count", fuzz_args.spec.count, "number of samples");
  fuzz->add_option("--seed", fuzz_args.spec.seed, "campaign seed");
  fuzz->add_option("--mode", fuzz_args.mode_name,
                   "uniform|boundary|near-collinear|extreme|closed");
  fuzz->add_option("--tol", fuzz_args.tol, "float comparison tolerance");
  fuzz->add_option("--out", fuzz_args.out_path, "write the JSON report here");
  bool fuzz_json = false;
  fuzz->add_flag("--json", fuzz_json, "JSON output (always on for fuzz)");

  RenderArgs render_args;
  CLI::App* render =
      app.add_subcommand("render", "SVG figure of the vectors and their arcs");
  add_input_options(render, &render_args.common, "three vectors, \"x,y\" each");
  render->add_option("--out", render_args.out_path, "write the SVG here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  merge_extras(classify, &classify_args);
  merge_extras(sum, &sum_args);
  merge_extras(triangle, &triangle_args);
  merge_extras(render, &render_args.common);

  try {
    if (*classify) return cmd_classify(classify_args);
    if (*sum) return cmd_sum(sum_args);
    if (*triangle) return cmd_triangle(triangle_args);
    if (*fuzz) return cmd_fuzz(fuzz_args);
    if (*render) return cmd_render(render_args);
  } catch (const anglekit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const anglekit::InternalContradictionError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const anglekit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
