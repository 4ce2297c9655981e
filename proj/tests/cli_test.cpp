// Copyright 2026 The skewmul Authors.
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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SKEWMUL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(SKEWMUL_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "skewmul_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

TEST(CliTest, MulGoldenOverF4) {
  const std::string args =
      data("f4.field") + " " + data("f4_a.poly") + " " + data("f4_b.poly");
  const auto golden = slurp(data("f4_ab.golden"));
  for (const char* mode : {"naive", "crt", "auto", "cyclic"}) {
    const auto r = run("mul " + args + " --mode " + mode);
    EXPECT_EQ(r.exit_code, 0) << mode;
    // r = 2 and deg 2: reducing mod X^2 - 1 folds X^2 into the constant.
    if (std::string(mode) == "cyclic") {
      EXPECT_EQ(r.out, "[[0,1],[1,0]]\n");
    } else {
      EXPECT_EQ(r.out, golden) << mode;
    }
  }
}

TEST(CliTest, MulModesAgreeAndOneEchoes) {
  const auto field = scratch("f.field"), a = scratch("a.poly"), b = scratch("b.poly"),
             one = scratch("one.poly");
  write(field, "p=3;f=2,2,0,1");  // x^3 + 2x + 2 is irreducible over F_3
  write(a, "[[1,2,0],[0,0,1],[2,2,2],[1],[0,1],[2,0,1],[1,1,1],[0,0,2],[2],[1,0,1],[0,2]]");
  write(b, "[[2,1,1],[1],[0,2,2],[1,1],[0,0,1],[2,2],[1,0,0],[0,1],[1,2,1],[2]]");
  write(one, "[[1]]");
  const auto naive = run("mul " + field.string() + " " + a.string() + " " + b.string() +
                         " --mode naive");
  const auto autom = run("mul " + field.string() + " " + a.string() + " " + b.string());
  const auto crt = run("mul " + field.string() + " " + a.string() + " " + b.string() +
                       " --mode crt");
  EXPECT_EQ(naive.exit_code, 0);
  EXPECT_EQ(naive.out, autom.out);
  EXPECT_EQ(naive.out, crt.out);
  const auto echoed = run("mul " + field.string() + " " + one.string() + " " + b.string());
  EXPECT_EQ(echoed.out, "[[2,1,1],[1,0,0],[0,2,2],[1,1,0],[0,0,1],[2,2,0],[1,0,0],[0,1,0],"
                        "[1,2,1],[2,0,0]]\n");
}

TEST(CliTest, UsageErrorsExitTwo) {
  const auto bad = scratch("bad.poly");
  write(bad, "[[1,1],\n [0,3]]");
  EXPECT_EQ(run("mul " + data("f4.field") + " " + bad.string() + " " + data("f4_b.poly")).exit_code,
            2);
  EXPECT_EQ(run("mul 'p=2;f=1,0,1' " + data("f4_a.poly") + " " + data("f4_b.poly")).exit_code,
            2);  // x^2 + 1 is reducible
  EXPECT_EQ(run("mul " + data("f4.field") + " " + data("f4_a.poly") + " " +
                data("f4_b.poly") + " --mode small")
                .exit_code,
            2);  // deg 2 >= r
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
}

TEST(CliTest, SelftestSmallGridAndFault) {
  const auto ok = run("selftest --primes 2 3 --r-max 3 --trials 1 --max-degree 20");
  EXPECT_EQ(ok.exit_code, 0);
  // 6 cells: 4 per cell, 15 per trial, plus Gabidulin on r >= 2 (4 cells).
  std::size_t lines = 0;
  for (char c : ok.out) lines += c == '\n';
  EXPECT_EQ(lines, 6u * 4 + 6u * 15 + 4u);
  EXPECT_EQ(ok.out.find("\"fail\""), std::string::npos);
  const auto bad = run("selftest --primes 2 --r-max 2 --trials 1 --max-degree 20 --inject-fault");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.out.find("\"verdict\":\"fail\""), std::string::npos);
}

TEST(CliTest, GabidulinDemoAndRoundTrip) {
  const auto demo = run("gabidulin demo --p 2 --r 8 --n 8 --k 4 --t 2 --trials 100");
  EXPECT_EQ(demo.exit_code, 0);
  EXPECT_EQ(demo.out.rfind("100/100 decoded", 0), 0u) << demo.out;
  const auto beyond = run("gabidulin demo --p 2 --r 8 --n 8 --k 4 --t 4 --trials 20");
  EXPECT_EQ(beyond.exit_code, 0);
  EXPECT_EQ(beyond.out.find(" 0 failures"), std::string::npos) << beyond.out;

  const auto field = scratch("g.field"), msg = scratch("msg.poly"), cw = scratch("cw.word"),
             back = scratch("back.poly");
  write(field, "p=2;f=1,0,1,1,1,0,0,0,1");  // x^8 + x^4 + x^3 + x^2 + 1
  write(msg, "[[1,0,1,1,0,0,1,0],[0,1,1,0,1,0,0,1],[1,1,1,1,0,0,0,0]]\n");
  const std::string code = " --field " + field.string() + " --n 8 --k 4";
  EXPECT_EQ(run("gabidulin encode" + code + " --msg " + msg.string() + " --out " + cw.string())
                .exit_code,
            0);
  EXPECT_EQ(run("gabidulin decode" + code + " --received " + cw.string() + " --out " +
                back.string())
                .exit_code,
            0);
  EXPECT_EQ(slurp(back), slurp(msg));
}

TEST(CliTest, BenchCsvShape) {
  const auto r = run("bench --p 3 --r 4 --degrees 8,16 --modes naive,crt,auto --reps 1");
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "p,r,d,mode,nanos,crt_retries");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  EXPECT_EQ(rows, 2u * 3u);
}

}  // namespace
