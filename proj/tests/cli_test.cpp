#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cycloid/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cycloid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST(Cli, CycAll) {
  const auto r = run({"cyc", "2", "8", "1", "4", "--method", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "cyc=4"));
  EXPECT_TRUE(has_line(r.out, "agreement=yes"));
  EXPECT_TRUE(has_line(r.out, "witness.i=1"));
  EXPECT_TRUE(has_line(r.out, "witness.j=2"));
}

TEST(Cli, CycMethods) {
  for (const char* m : {"formula", "lattice", "graph"}) {
    const auto r = run({"cyc", "1", "2", "5", "3", "--method", m});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "cyc=7")) << m;
  }
  EXPECT_EQ(run({"cyc", "1", "2", "5", "3", "--method", "magic"}).code, 2);
}

TEST(Cli, Info) {
  const auto r = run({"info", "4", "3", "3", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "area=21"));
  EXPECT_TRUE(has_line(r.out, "cyc=6"));
  EXPECT_TRUE(has_line(r.out, "regular=true"));
  EXPECT_TRUE(has_line(r.out, "corner.R=7,0"));
  const auto c = run({"info", "2", "8", "1", "4"});
  EXPECT_TRUE(has_line(c.out, "case_c=n/a"));
}

TEST(Cli, EquivAndCanonical) {
  auto r = run({"equiv", "4", "2", "2", "3", "--", "1", "1", "5", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equivalent (1,0)\n");
  r = run({"equiv", "4", "2", "2", "3", "--", "0", "0", "1", "0"});
  EXPECT_EQ(r.out, "not equivalent\n");
  r = run({"canonical", "4", "2", "2", "3", "--", "5", "-1"});
  EXPECT_EQ(r.out, "canonical=1,1\n");
}

TEST(Cli, Iso) {
  auto r = run({"iso", "2", "3", "2", "8", "--", "2", "3", "6", "2", "--oracle"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "closure=isomorphic"));
  EXPECT_TRUE(has_line(r.out, "oracle=isomorphic"));
  r = run({"iso", "1", "1", "1", "1", "--", "4", "3", "3", "3"});
  EXPECT_TRUE(has_line(r.out, "closure=not-shown"));
  r = run({"iso", "4", "3", "10", "3", "--", "4", "3", "2", "9", "--steps", "1"});
  EXPECT_TRUE(has_line(r.out, "closure=not-shown"));
  r = run({"iso", "4", "3", "10", "3", "--", "4", "3", "2", "9", "--oracle"});
  EXPECT_EQ(r.code, 1);  // area 42 is over the oracle cap
  EXPECT_EQ(r.err.rfind("domain-error:", 0), 0u);
}

TEST(Cli, NetExport) {
  const auto dot = run({"net", "1", "1", "1", "1"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  const auto json = run({"net", "1", "1", "1", "1", "--format", "json"});
  EXPECT_EQ(json.out.rfind("{\"params\":[1,1,1,1]", 0), 0u);
  EXPECT_EQ(run({"net", "1", "1", "1", "1", "--format", "json"}).out, json.out);

  const auto path = std::filesystem::temp_directory_path() / "cycloid_cli_test.dot";
  const auto written = run({"net", "1", "1", "1", "1", "--out", path.string()});
  EXPECT_EQ(written.code, 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), dot.out);
  std::filesystem::remove(path);
}

TEST(Cli, Sim) {
  const std::vector<std::string> args{"sim", "4", "3", "3", "3", "--marking",
                                      "F:0,0,F:1,1,F:2,2,B:0,1,B:1,2,B:2,0", "--steps", "20", "--seed", "9"};
  const auto a = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.rfind("step=0 marking=", 0), 0u);
  EXPECT_EQ(run(args).out, a.out);

  const auto d = run({"sim", "4", "2", "2", "3", "--marking", "F:0,0,B:3,2", "--steps", "5"});
  EXPECT_TRUE(has_line(d.out, "step=1 fire=T:1,0 marking=F:1,0,B:1,0"));
  EXPECT_TRUE(has_line(d.out, "status=deadlock"));
  EXPECT_EQ(run({"sim", "4", "2", "2", "3", "--marking", "F:0"}).code, 1);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--max", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "checked=81"));
  EXPECT_TRUE(has_line(r.out, "violations=0"));
  EXPECT_EQ(run({"verify", "--max", "3"}).out, r.out);
}

TEST(Cli, ErrorsAndExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"cyc", "1", "2"}).code, 2);
  auto r = run({"cyc", "0", "1", "1", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("domain-error:", 0), 0u);
  r = run({"equiv", "4", "2", "2", "3", "--", "1", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("usage-error:", 0), 0u);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, MaxAreaEnvironment) {
  ::setenv("CYCLOID_MAX_AREA", "10", 1);
  const auto capped = run({"cyc", "4", "3", "3", "3", "--method", "graph"});
  ::setenv("CYCLOID_MAX_AREA", "zero", 1);
  const auto bad = run({"cyc", "4", "3", "3", "3"});
  ::unsetenv("CYCLOID_MAX_AREA");
  EXPECT_EQ(capped.code, 1);
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(run({"cyc", "4", "3", "3", "3", "--method", "graph"}).code, 0);
}
