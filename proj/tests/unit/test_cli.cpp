// Copyright 2026 The softeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace softeq;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Files {
 public:
  Files() {
    dir_ = std::filesystem::temp_directory_path() /
           ("softeq-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::create_directories(dir_);
  }
  ~Files() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string dir() const { return dir_.string(); }

 private:
  std::filesystem::path dir_;
};

const char* tight = "var X1 set 1\nvar X2 set 2\nvar X3 set 1 3\nvar X4 set 2 3\n";
const char* intervals = "var A interval 1 3\nvar B set 1\nvar C set 1\n";

}  // namespace

TEST_CASE("cli exit codes", "[cli]") {
  Files f;
  const std::string t = f.write("tight.txt", tight);
  const std::string iv = f.write("iv.txt", intervals);
  const std::string bad = f.write("bad.txt", "var A set\n");
  const std::string apart = f.write("apart.txt", "var A set 1\nvar B set 2\n");
  const std::string heavy = f.write("heavy.txt", "var A set 1 2\nvar B set 1 2\nvar C set 1 2\n");
  const std::string multi = f.write("m.txt", "copies 3\nvar 1.a set 1\nvar 2.a set 2\nvar 3.a set 3\ncost max 2\n");

  struct Row {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Row> table = {
      {{"solve", t, "--method", "brute"}, 0},
      {{"solve", t, "--method", "dp"}, 3},
      {{"solve", heavy, "--method", "matching"}, 3},
      {{"solve", heavy, "--method", "fpt", "--budget", "1"}, 3},
      {{"solve", t, "--method", "brute", "--cap", "2"}, 3},
      {{"solve", t, "--method", "magic"}, 2},
      {{"solve", bad, "--method", "dp"}, 2},
      {{"solve", f.dir() + "/missing.txt", "--method", "dp"}, 2},
      {{"propagate-var-min", apart, "--lo", "2"}, 1},
      {{"propagate-var-min", t, "--lo", "2", "--mode", "rc"}, 3},
      {{"propagate-var-min", t, "--lo", "2", "--mode", "xx"}, 2},
      {{"filter-graph-min", apart, "--max-diseq", "0"}, 1},
      {{"similar", multi}, 1},
      {{"crests", t}, 3},
      {{"greedy", t, "--tie-break", "list:9"}, 2},
      {{"generate", "tree"}, 2},
      {{"generate", "set", "--n", "0"}, 2},
      {{}, 2},
      {{"nope"}, 2},
      {{"--help"}, 0},
  };
  for (const Row& row : table) {
    const Result r = run(row.args);
    std::string joined;
    for (const auto& a : row.args) joined += a + ' ';
    INFO(joined << "\n" << r.err);
    CHECK(r.code == row.code);
  }
}

TEST_CASE("cli outputs", "[cli]") {
  Files f;
  const std::string t = f.write("tight.txt", tight);
  const std::string iv = f.write("iv.txt", intervals);

  CHECK(run({"solve", t, "--method", "matching"}).out ==
        "optimum=2\nassign X1 1\nassign X2 2\nassign X3 1\nassign X4 2\n");
  CHECK(run({"greedy", t, "--tie-break", "list:3"}).out ==
        "lower_bound=1\nobjective=1\nassign X1 1\nassign X2 2\nassign X3 3\nassign X4 3\n");
  CHECK(run({"classify", t}).out == "heavy:\nconflicting:\n");
  CHECK(run({"occ", iv}).out == "occ 1 2 3\nocc 3 1 1\n");
  CHECK(run({"crests", iv}).out == "crest 1 3\n");
  CHECK(run({"filter-graph-min", iv, "--max-diseq", "1"}).out == "prune A 1\ndiseq.lo=0\n");
  CHECK(run({"propagate-var-min", t, "--lo", "2"}).out == "nprime.hi=2\n");

  const std::string a = f.write("s3.txt",
                                "var X1 set 1 2 3\nvar X2 set 1 2 3\nvar X3 set 1 2 3\nvar X4 set 1 2 3\n"
                                "var X5 set 1 2 3\nvar X6 set 1 2 3\nvar X7 set 1 2 3\n");
  const std::string s = f.write("s3.assign",
                                "assign X1 1\nassign X2 1\nassign X3 1\nassign X4 1\nassign X5 2\n"
                                "assign X6 2\nassign X7 3\n");
  CHECK(run({"eval", a, "--assignment", s}).out ==
        "equalities=7\ndisequalities=14\nalldiff_var=4\nallequal_var=3\nnvalues=3\n");

  const std::string tdm = f.write("t.3dm", "elem x a\nelem y b\nelem z c\ntriple a b c\n");
  CHECK(run({"reduce-3dm", tdm}).out ==
        "var a set 1 3 4\nvar b set 1 3 7\nvar c set 1 4 7\n");

  const std::string m = f.write("m.txt", "copies 3\nvar 1.a set 1\nvar 2.a set 2\nvar 3.a set 3\n");
  CHECK(run({"similar", m}).out == "N1.lo=3\nN.lo=3\n");
}

TEST_CASE("cli limits: flags win over the environment", "[cli]") {
  Files f;
  const std::string t = f.write("tight.txt", tight);
  ::setenv("SOFTEQ_BRUTE_CAP", "2", 1);
  CHECK(run({"solve", t, "--method", "brute"}).code == 3);
  CHECK(run({"solve", t, "--method", "brute", "--cap", "100"}).code == 0);
  ::setenv("SOFTEQ_BRUTE_CAP", "zero", 1);
  CHECK(run({"solve", t, "--method", "brute"}).code == 2);
  ::unsetenv("SOFTEQ_BRUTE_CAP");
  ::setenv("SOFTEQ_FPT_BUDGET", "1", 1);
  CHECK(run({"solve", t, "--method", "fpt"}).code == 3);
  ::unsetenv("SOFTEQ_FPT_BUDGET");
  ::setenv("SOFTEQ_DP_MAX_CELLS", "1", 1);
  const std::string iv = f.write("iv.txt", intervals);
  CHECK(run({"solve", iv, "--method", "dp", "--no-crest-reduction"}).code == 3);
  ::unsetenv("SOFTEQ_DP_MAX_CELLS");
}

TEST_CASE("cli bench", "[cli]") {
  Files f;
  const std::string t = f.write("a.txt", tight);
  const std::string iv = f.write("b.txt", intervals);
  const Result r = run({"bench", f.dir(), "--methods", "greedy,dp,brute", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bench dp " + t + " error:precondition 0\n") != std::string::npos);
  CHECK(r.out.find("bench greedy " + iv + " 3 0\n") != std::string::npos);
  CHECK(r.out.find("bench brute " + t + " 2 0\n") != std::string::npos);
  CHECK(r.out == run({"bench", f.dir(), "--methods", "greedy,dp,brute", "--no-timing"}).out);
  // Greedy reaches 2 of 2 on the tight instance with smallest-first.
  CHECK(r.out.find("1000") != std::string::npos);

  const Result big = run({"bench", t, "--methods", "brute", "--cap", "2", "--no-timing"});
  CHECK(big.code == 0);
  CHECK(big.out.find("error:budget") != std::string::npos);

  const Result empty = run({"bench", "--methods", "greedy"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(run({"bench", t, "--methods", "nope"}).code == 2);
}

TEST_CASE("cli is deterministic", "[cli]") {
  Files f;
  for (const char* kind : {"set", "interval", "two-occ", "one-heavy", "3dm", "multi"}) {
    const Result a = run({"generate", kind, "--seed", "5", "--n", "3"});
    const Result b = run({"generate", kind, "--seed", "5", "--n", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const std::string two = f.write("two.txt", run({"generate", "two-occ", "--n", "8", "--seed", "1"}).out);
  CHECK(run({"solve", two, "--method", "matching"}).code == 0);
  const std::string iv =
      f.write("iv.txt", run({"generate", "interval", "--n", "6", "--lambda", "9", "--seed", "1"}).out);
  CHECK(run({"solve", iv, "--method", "dp"}).code == 0);
}
