#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
  bool has(const std::string& s) const { return out.find(s) != std::string::npos; }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = floer::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

using fixture::corpus;

}  // namespace

TEST(Cli, FlavorsOnSingleGenerator) {
  const Result r = run({"flavors", corpus("single_generator.txt"), "--window", "-6..6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.has("[single]"));
  EXPECT_TRUE(r.has("  minus: H_-1 = Z\n"));
  EXPECT_TRUE(r.has("  minus: H_-2 = 0\n"));
  EXPECT_TRUE(r.has("  inf: H_0 = 0\n"));
  EXPECT_TRUE(r.has("  plus: H_0 = Z\n"));
  EXPECT_TRUE(r.has("  hat: H_0 = Z\n"));
  EXPECT_TRUE(r.has("  hat: H_1 = Z\n"));
  EXPECT_TRUE(r.has("PASS minus>inf>plus"));
  EXPECT_TRUE(r.has("PASS minus>u>minus>hat"));
}

TEST(Cli, KoszulOnRandomSeed) {
  const Result r =
      run({"koszul", corpus("random_u_1.txt"), "--direction", "a", "--flavor", "minus", "--window", "-6..6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.has("minus: shift=+1, match=yes")) << r.out;
}

TEST(Cli, KoszulBOnYComplex) {
  const Result r = run({"koszul", corpus("y_single.txt"), "--direction", "b", "--window", "-6..6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.has("b: shift=-1, match=yes")) << r.out;
}

TEST(Cli, PerturbedBundleFails) {
  const Result r = run({"verify", corpus("perturbed_bundle.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.has("FAIL U-j"));
  EXPECT_TRUE(r.has("FAIL dbar^2"));
  EXPECT_TRUE(r.has("PASS U-i"));
}

TEST(Cli, VerifyGoldenObjects) {
  for (const char* f : {"coupled_a.txt", "coupled_d.txt", "tower_n3.txt", "filtered_shift.txt", "u_pair.txt"}) {
    const Result r = run({"verify", corpus(f)});
    EXPECT_EQ(r.code, 0) << f << "\n" << r.out << r.err;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"homology"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"homology", "/nonexistent/file.txt"}).code, 2);
  EXPECT_EQ(run({"flavors", corpus("single_generator.txt")}).code, 2);  // window required
  EXPECT_EQ(run({"flavors", corpus("single_generator.txt"), "--window", "3"}).code, 2);
  EXPECT_EQ(run({"ey", corpus("single_generator.txt"), "--flavor", "tilde", "--window", "0..1"}).code, 2);
  EXPECT_EQ(run({"su", corpus("z_to_z_coeff2.txt"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"homology", corpus("z_to_z_coeff2.txt")}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, HomologyTable) {
  const Result r = run({"homology", corpus("z_to_z_coeff2.txt"), "--format", "machine"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.has("table=H degree=0 group=Z/2 safe=yes\n"));
  EXPECT_TRUE(r.has("failures=0\n"));
}

TEST(Cli, TowerDefaultsToPoint) {
  const Result r = run({"tower", "--n", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.has("PASS S_U(bar)=0 at safe degrees"));
  EXPECT_TRUE(r.has("edges: degrees=-6,7"));
}

TEST(Cli, ConnectedSumCommands) {
  Result r = run({"consum-case1", corpus("single_generator.txt"), "--n", "4"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.has("case1: shift=+1, match=yes"));
  r = run({"consum-case2", corpus("u_pair.txt"), "--window", "-5..5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.has("PASS case2:hat"));
  r = run({"consum-verify", corpus("summaps_identity.txt")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(r.has("PASS VV'=1+[D,M]"));
  r = run({"cmflavors", corpus("filtered_shift.txt"), "--window", "-6..6"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.has("  CMhat: H_1 = Z"));
}

TEST(Cli, LadderOnCoupledInstance) {
  const Result r = run({"ladder", corpus("coupled_b.txt"), "--window", "-5..6"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.has("PASS cone"));
  EXPECT_TRUE(r.has("bar: vanishes=yes, j_iso=yes"));
}

TEST(Cli, MachineReportsAreByteIdentical) {
  const std::vector<std::string> args{"flavors", corpus("random_u_2.txt"), "--window", "-6..6", "--format", "machine"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, GenerateIsSeeded) {
  const Result a = run({"generate", "--seed", "5", "--kind", "y"}), b = run({"generate", "--seed", "5", "--kind", "y"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"generate", "--seed", "6", "--kind", "y"}).out);
  EXPECT_NO_THROW(floer::parse_text(a.out));
  EXPECT_EQ(run({"generate", "--kind", "sphere"}).code, 2);
}
