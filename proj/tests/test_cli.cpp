#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"

using namespace gabriel;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GABRIEL_FIXTURES) + "/" + name; }

}  // namespace

TEST(Cli, VerifyDiamond) {
  auto r = run({"verify", fixture("m3.lat")});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["stabilization_index"], 1);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Cli, CheckPentagonReportsWitness) {
  auto r = run({"check", fixture("n5.lat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("modular: no (witness a=a b=b c=c)"), std::string::npos) << r.out;
}

TEST(Cli, CheckDiamond) {
  auto r = run({"check", fixture("m3.lat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lattice m3: 5 elements, 6 covers\nbottom: 0\ntop: 1\nmodular: yes\n");
}

TEST(Cli, GdimOfTwoChain) {
  auto r = run({"gdim", fixture("two_chain.lat"), "--interval", "0,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1\n");
  r = run({"gdim", fixture("two_chain.lat"), "--interval", "0,1", "--method", "construction"});
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, GdimTable) {
  auto r = run({"gdim", fixture("two_chain.lat")});
  EXPECT_EQ(r.out, "0 0 0\n0 1 1\n1 1 0\nlattice: 1\n");
}

TEST(Cli, VerifyPentagonIsAPreconditionError) {
  EXPECT_EQ(run({"verify", fixture("n5.lat")}).code, 3);
  EXPECT_EQ(run({"verify", fixture("hexagon.lat")}).code, 3);
}

TEST(Cli, VerifyForbidsOverride) {
  EXPECT_EQ(run({"verify", fixture("n5.lat"), "--allow-nonmodular"}).code, 2);
}

TEST(Cli, ClosureOnPentagonWithOverride) {
  auto r = run({"closure", fixture("n5.lat"), "--set", "a:c", "--op", "basic", "--allow-nonmodular"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("warning: lattice is not modular"), std::string::npos);
  EXPECT_NE(r.out.find("flags: abstract basic"), std::string::npos);
}

TEST(Cli, ClosureOutput) {
  auto r = run({"closure", fixture("three_chain.lat"), "--set", "0:m,0:0,m:m,1:1", "--op", "dvs"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "dvs: 4 intervals\nflags: abstract basic congruence pre_division division\n"
                   "[0,0] [0,m] [m,m] [1,1]\n");
  EXPECT_EQ(run({"closure", fixture("three_chain.lat"), "--set", "0:m", "--op", "crt"}).code, 3);
  EXPECT_EQ(run({"closure", fixture("three_chain.lat"), "--set", "0:m", "--op", "nope"}).code, 2);
  EXPECT_EQ(run({"closure", fixture("three_chain.lat"), "--set", "1:0", "--op", "dvs"}).code, 2);
}

TEST(Cli, Filtration) {
  auto r = run({"filtration", fixture("two_chain.lat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "stage 0 (2 intervals): [0,0] [1,1]\nstage 1 (3 intervals): [0,0] [0,1] [1,1]\n"
                   "stabilization_index: 1\n");
}

TEST(Cli, Intervals) {
  auto r = run({"intervals", fixture("two_chain.lat")});
  EXPECT_EQ(r.out, "3 intervals\n0 [0,0] trivial\n1 [0,1]\n2 [1,1] trivial\n");
}

TEST(Cli, ExitCodeMatrix) {
  const std::string good = fixture("m3.lat");
  const std::string bad = fixture("invalid/syntax.lat");
  const std::string nonmodular = fixture("n5.lat");
  struct Row {
    std::vector<std::string> prefix;
    std::vector<std::string> suffix;
    int good, bad, nonmodular;
  };
  std::vector<Row> rows{
      {{"check"}, {}, 0, 2, 0},
      {{"intervals"}, {}, 0, 2, 0},
      {{"closure"}, {"--set", "0:a", "--op", "basic"}, 0, 2, 3},
      {{"filtration"}, {}, 0, 2, 3},
      {{"gdim"}, {}, 0, 2, 3},
      {{"verify"}, {}, 0, 2, 3},
      {{"export-dot"}, {}, 0, 2, 0},
  };
  for (const auto& row : rows) {
    int expected[] = {row.good, row.bad, row.nonmodular};
    const std::string* inputs[] = {&good, &bad, &nonmodular};
    for (int k = 0; k < 3; ++k) {
      auto args = row.prefix;
      args.push_back(*inputs[k]);
      args.insert(args.end(), row.suffix.begin(), row.suffix.end());
      auto r = run(args);
      EXPECT_EQ(r.code, expected[k]) << row.prefix[0] << " " << *inputs[k] << "\n" << r.err;
    }
  }
  EXPECT_EQ(run({"gen", "--kind", "chain", "--params", "3"}).code, 0);
  EXPECT_EQ(run({"gen", "--kind", "chain", "--params", "0"}).code, 2);
  EXPECT_EQ(run({"gen", "--kind", "torus", "--params", "3"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  auto r = run({"check"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("usage:"), std::string::npos);
  EXPECT_EQ(run({"check", fixture("m3.lat"), "--kind", "chain", "--params", "2"}).code, 2);
  EXPECT_EQ(run({"closure", fixture("m3.lat"), "--op", "dvs"}).code, 2);
  EXPECT_EQ(run({"check", fixture("missing.lat")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GeneratedInputs) {
  auto r = run({"check", "--kind", "subspace", "--params", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("lattice subspace_2: 5 elements, 6 covers\n", 0), 0U);
  EXPECT_EQ(run({"verify", "--kind", "downset", "--params", "5", "--lattice-seed", "4"}).code, 0);
}

TEST(Cli, GenOutputParses) {
  auto r = run({"gen", "--kind", "downset", "--params", "6", "--seed", "3"});
  ASSERT_EQ(r.code, 0);
  auto doc = parse_lattice_text(r.out);
  EXPECT_EQ(doc.name, "downset_6_seed3");
  EXPECT_TRUE(to_lattice(doc).modular());
  EXPECT_EQ(r.out, run({"gen", "--kind", "downset", "--params", "6", "--seed", "3"}).out);
}

TEST(Cli, VerifyIsByteStable) {
  auto a = run({"verify", fixture("divisor12.lat")});
  auto b = run({"verify", fixture("divisor12.lat")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyDirectory) {
  auto a = run({"verify", GABRIEL_FIXTURES});
  // hexagon, n5 and random_nonmodular are not modular
  EXPECT_EQ(a.code, 3);
  auto j = nlohmann::json::parse(a.out);
  ASSERT_TRUE(j.is_array());
  std::vector<std::string> files;
  for (const auto& e : j) files.push_back(e["file"]);
  EXPECT_TRUE(std::is_sorted(files.begin(), files.end()));
  EXPECT_EQ(a.out, run({"verify", GABRIEL_FIXTURES}).out);
}

TEST(Cli, OutFile) {
  auto path = std::filesystem::temp_directory_path() / "gabriel_cli_test.dot";
  auto r = run({"export-dot", fixture("two_chain.lat"), "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "digraph \"two_chain\" {");
  std::filesystem::remove(path);
}
