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

// Golden tests for the command-line tool: every subcommand's bytes and exit
// code against checked-in references.
//
//   cli_golden <path-to-cli> <golden-dir>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;
std::string g_golden_dir;
std::string g_tmp_dir;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = g_tmp_dir + "/out";
  const std::string cmd =
      "'" + g_cli + "' " + args + " > '" + out_path + "' 2> /dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_path);
  return r;
}

bool expect_eq_golden(const RunResult& r, const std::string& golden_name,
                      int want_exit = 0) {
  const std::string want = read_file(g_golden_dir + "/" + golden_name);
  if (r.exit_code != want_exit) {
    std::cerr << "  exit code " << r.exit_code << ", want " << want_exit
              << "\n";
    return false;
  }
  if (r.out != want) {
    std::cerr << "  output differs from " << golden_name << " ("
              << r.out.size() << " vs " << want.size() << " bytes)\n";
    return false;
  }
  return true;
}

// For fuzz reports: identical up to the elapsed_ms field.
bool expect_eq_golden_json_sans_timing(const RunResult& r,
                                       const std::string& golden_name,
                                       int want_exit = 0) {
  if (r.exit_code != want_exit) {
    std::cerr << "  exit code " << r.exit_code << ", want " << want_exit
              << "\n";
    return false;
  }
  nlohmann::json got = nlohmann::json::parse(r.out);
  nlohmann::json want =
      nlohmann::json::parse(read_file(g_golden_dir + "/" + golden_name));
  got["elapsed_ms"] = 0;
  want["elapsed_ms"] = 0;
  if (got != want) {
    std::cerr << "  JSON differs from " << golden_name << "\n";
    return false;
  }
  return true;
}

struct Case {
  const char* name;
  std::function<bool()> check;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: cli_golden <cli> <golden-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_golden_dir = argv[2];

  char tmpl[] = "/tmp/anglekit_cli_XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::cerr << "mkdtemp failed\n";
    return 2;
  }
  g_tmp_dir = tmpl;

  const std::vector<Case> cases = {
      {"classify alternative I (json)",
       [] {
         return expect_eq_golden(run("classify --json \"1,0 0,1 -1,-1\""),
                                 "classify_alt1.json");
       }},
      {"classify alternative II (json)",
       [] {
         return expect_eq_golden(run("classify --json \"1,0 0,-1 -1,1\""),
                                 "classify_alt2.json");
       }},
      {"classify neither (json)",
       [] {
         return expect_eq_golden(run("classify --json \"1,0 0,1 0,1\""),
                                 "classify_neither.json");
       }},
      {"classify text output",
       [] {
         return expect_eq_golden(run("classify \"1,0 0,1 -1,-1\""),
                                 "classify_alt1.txt");
       }},
      {"classify accepts separate args with leading dashes",
       [] {
         return expect_eq_golden(run("classify --json 1,0 0,1 -1,-1"),
                                 "classify_alt1.json");
       }},
      {"classify via stdin",
       [] {
         const std::string out_path = g_tmp_dir + "/out";
         const std::string cmd = "echo '1,0 0,1 -1,-1' | '" + g_cli +
                                 "' classify --json > '" + out_path +
                                 "' 2>/dev/null";
         const int status = std::system(cmd.c_str());
         RunResult r;
         r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
         r.out = read_file(out_path);
         return expect_eq_golden(r, "classify_alt1.json");
       }},
      {"classify rejects a zero vector with exit 3",
       [] { return run("classify \"0,0 1,0 1,0\"").exit_code == 3; }},
      {"classify rejects malformed input with exit 2",
       [] { return run("classify \"1,0 nope 2,1\"").exit_code == 2; }},
      {"classify wants exactly three vectors",
       [] { return run("classify \"1,0 0,1\"").exit_code == 2; }},
      {"sum json",
       [] {
         return expect_eq_golden(run("sum --json \"1,0 0,1 -1,-1\""),
                                 "sum_alt1.json");
       }},
      {"sum text in pi multiples",
       [] {
         return expect_eq_golden(run("sum --pi \"1,0 0,-1 -1,1\""),
                                 "sum_alt2_pi.txt");
       }},
      {"sum accepts rational and decimal components",
       [] {
         return expect_eq_golden(run("sum --json \"1/1,0.0 0,2/2 -0.5,-1/2\""),
                                 "sum_alt1.json");
       }},
      {"triangle json",
       [] {
         return expect_eq_golden(run("triangle --json \"0,0 1,0 0,1\""),
                                 "triangle_right.json");
       }},
      {"triangle degenerate",
       [] {
         return expect_eq_golden(run("triangle --json \"0,0 1,0 2,0\""),
                                 "triangle_degenerate.json");
       }},
      {"triangle duplicate points exit 3",
       [] { return run("triangle \"0,0 1,1 0,0\"").exit_code == 3; }},
      {"triangle from a JSON file",
       [] {
         const std::string path = g_tmp_dir + "/points.json";
         std::ofstream(path) << R"([[0,0],["1","0"],[0,1.0]])";
         return expect_eq_golden(run("triangle --json --file '" + path + "'"),
                                 "triangle_right.json");
       }},
      {"malformed JSON input is a parse error",
       [] {
         const std::string bad_shape = g_tmp_dir + "/bad_shape.json";
         std::ofstream(bad_shape) << R"([[0,0],[1],[0,1]])";
         const std::string bad_range = g_tmp_dir + "/bad_range.json";
         std::ofstream(bad_range) << R"([[0,0],[1,0],[0,1e400]])";
         const std::string not_json = g_tmp_dir + "/not_json.json";
         std::ofstream(not_json) << "[0,0 1,0";
         return run("triangle --file '" + bad_shape + "'").exit_code == 2 &&
                run("triangle --file '" + bad_range + "'").exit_code == 2 &&
                run("triangle --file '" + not_json + "'").exit_code == 2;
       }},
      {"fuzz uniform golden report",
       [] {
         return expect_eq_golden_json_sans_timing(
             run("fuzz --count 100 --seed 42"), "fuzz_uniform_100.json");
       }},
      {"fuzz count 0 is a usage error",
       [] { return run("fuzz --count 0").exit_code == 2; }},
      {"fuzz unknown mode is a usage error",
       [] { return run("fuzz --mode nope --count 1").exit_code == 2; }},
      {"fuzz --out writes the same report",
       [] {
         const std::string path = g_tmp_dir + "/report.json";
         const RunResult r =
             run("fuzz --count 100 --seed 42 --out '" + path + "'");
         if (r.exit_code != 0) return false;
         RunResult from_file;
         from_file.exit_code = 0;
         from_file.out = read_file(path);
         return expect_eq_golden_json_sans_timing(from_file,
                                                  "fuzz_uniform_100.json");
       }},
      {"fuzz with a nonsense tolerance fails with exit 1",
       [] {
         return run("fuzz --count 30 --seed 1 --tol 10").exit_code == 1;
       }},
      {"render alternative I matches the golden bytes",
       [] {
         return expect_eq_golden(run("render \"1,0 0,1 -1,-1\""),
                                 "render_alt1.svg");
       }},
      {"render alternative II matches the golden bytes",
       [] {
         return expect_eq_golden(run("render \"1,0 0,-1 -1,1\""),
                                 "render_alt2.svg");
       }},
      {"render twice is byte-identical",
       [] {
         const RunResult r1 = run("render \"1,0 0,1 -1,-1\"");
         const RunResult r2 = run("render \"1,0 0,1 -1,-1\"");
         return r1.exit_code == 0 && r1.out == r2.out;
       }},
      {"render rejects a zero vector with exit 3",
       [] { return run("render \"0,0 1,0 1,0\"").exit_code == 3; }},
      {"missing subcommand is a usage error",
       [] { return run("").exit_code == 2; }},
  };

  int failures = 0;
  for (const Case& c : cases) {
    const bool ok = c.check();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << "\n";
    failures += ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all " : "FAILED: ") << cases.size() - failures
            << "/" << cases.size() << " cli golden cases passed\n";
  return failures == 0 ? 0 : 1;
}
