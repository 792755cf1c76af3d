#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include "copsrobbers/game.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COPSROBBERS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, SolveK4) {
  auto r = run("solve --graph6 'C~'");
  ASSERT_EQ(r.code, 0);
  auto j = copsrobbers::Json::parse(r.out);
  EXPECT_EQ(j["cop_number"], 1);
  EXPECT_TRUE(j["elapsed_ms"].is_null());
}

TEST(Cli, PlayDigraphExample) {
  auto r = run("play --strategy digraph --gen random-diam2:n=8 --seed 7 --robber optimal");
  ASSERT_EQ(r.code, 0);
  auto j = copsrobbers::Json::parse(r.out);
  EXPECT_EQ(j["outcome"]["result"], "captured");
  EXPECT_LE(j["k"].get<int>(), 4);
  EXPECT_EQ(j["stages"][0]["stage"], "decomposition");
}

TEST(Cli, BoundsExample) {
  auto r = run("bounds --thm 7 --d 4 --n 1000000 --json");
  ASSERT_EQ(r.code, 0);
  auto j = copsrobbers::Json::parse(r.out);
  EXPECT_EQ(j["exponent"], "3/5");
  EXPECT_DOUBLE_EQ(j["exponent_value"].get<double>(), 0.6);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("solve --graph6 '!!!'").code, 2);
  EXPECT_EQ(run("gen --gen bogus --seed 1").code, 2);
  EXPECT_EQ(run("play --gen petersen").code, 2);  // --seed is mandatory
  EXPECT_EQ(run("play --strategy digraph --gen directed-cycle:n=9 --seed 1").code, 2);
  EXPECT_EQ(run("solve --gen petersen --seed 1 --budget 10").code, 3);
  EXPECT_EQ(run("verify --seed 1 --suite no.such").code, 2);
  EXPECT_EQ(run("verify --seed 1 --suite bounds.formulas").code, 0);
}

TEST(Cli, GenFormats) {
  auto g6 = run("gen --gen petersen --seed 0");
  ASSERT_EQ(g6.code, 0);
  EXPECT_EQ(g6.out, "IheA@GUAo\n");
  auto many = run("gen --gen tree:n=9 --seed 3 --count 4");
  EXPECT_EQ(std::count(many.out.begin(), many.out.end(), '\n'), 4);
  auto dimacs = run("gen --gen cycle:n=4 --seed 0 --format dimacs");
  EXPECT_NE(dimacs.out.find("p edge 4 4"), std::string::npos);
}

TEST(Cli, Deterministic) {
  for (const char* args :
       {"gen --gen random-diam:n=25,d=4 --seed 5 --count 3", "solve --gen random-diam:n=7,d=3 --seed 2",
        "play --strategy cover --gen random-diam:n=40,d=4 --seed 3 --slack 0.4",
        "play --strategy girth-guard --gen mcgee --seed 3 --robber random --max-rounds 50",
        "bench --gen random-diam:n=30,d=4 --gen random-diam2:n=7 --seed 1 --instances 3 --slack 0.4",
        "verify --seed 4 --suite matching_hall.hall", "bounds --thm 9 --d 100 --g 11 --n 5000 --json"}) {
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, BenchCsvShape) {
  auto r = run("bench --gen random-diam2:n=6 --seed 9 --instances 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("gen,seed,n,d,g,cops_used,captured,rounds,outcome\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  auto pos = r.out.find("\"random-diam2:n=6\",9,");
  auto next = r.out.find("\"random-diam2:n=6\",10,");
  EXPECT_NE(pos, std::string::npos);
  EXPECT_LT(pos, next);
}

}  // namespace
