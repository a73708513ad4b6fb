#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "toricreal/chambers.hpp"
#include "toricreal/cstar.hpp"
#include "toricreal/io.hpp"
#include "toricreal/realize.hpp"

using namespace toricreal;

namespace {

const std::string kCli = TORICREAL_CLI;
const std::string kData = TORICREAL_DATA_DIR;

struct Invocation {
  int status = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  Invocation r;
  std::string cmd = "'" + kCli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "toricreal-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

const std::string kBatyrev = " --fan '" + kData + "/batyrev33.fan'";

}  // namespace

TEST(Cli, RealizeMatchesTheLibrary) {
  Invocation r = run("realize" + kBatyrev + " --A 1,0,0,0,0,2,1 --B 1,2,0,0,0,0,1");
  ASSERT_EQ(r.status, 0);
  Realization G = geometric_realization(fixtures::batyrev33(), fixtures::divisor({1, 0, 0, 0, 0, 2, 1}),
                                        fixtures::divisor({1, 2, 0, 0, 0, 0, 1}), 1);
  EXPECT_EQ(r.out, render_text(action_info(G.polytope, G.u)));
  EXPECT_EQ(run("realize" + kBatyrev + " --A 1,0,0,0,0,2,1 --B 1,2,0,0,0,0,1").out, r.out);
}

TEST(Cli, NegativeLiteralsUseTheEqualsForm) {
  Invocation r = run("realize --fan '" + kData + "/p2_bundle.fan' --A 2,2,0,0,0,0 --B=-1,2,0,0,0,0 --ell 3");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("The weights are [0,2,3]"), std::string::npos);
}

TEST(Cli, StructuredReportIsByteIdentical) {
  const std::string args = "realize" + kBatyrev + " --A 1,0,0,0,0,2,1 --B 1,2,0,0,0,0,1 --report structured";
  Invocation a = run(args), b = run(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"toricreal.realization\""), std::string::npos);
}

TEST(Cli, SharpRealizeIsSeeded) {
  const std::string args = "sharp-realize" + kBatyrev + " --A=2,-4,0,7,0,0,0 --B=4,-2,0,5,0,0,0 --seed 1";
  Invocation a = run(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, run(args).out);
  EXPECT_NE(a.out.find("The weights are [0,2,3,6]"), std::string::npos);
  EXPECT_EQ(run("sharp-realize" + kBatyrev + " --A=2,-4,0,7,0,0,0 --B=4,-2,0,5,0,0,0").status, 2);
}

TEST(Cli, FanoRealize) {
  Invocation r = run("fano-realize" + kBatyrev + " --H=1,0,1,0,-1,0,0");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("The weights are [-12,-1,7,9,12]"), std::string::npos);
}

TEST(Cli, ChambersAndWallTest) {
  Invocation c = run("chambers" + kBatyrev);
  ASSERT_EQ(c.status, 0);
  ToricVariety Y = fixtures::batyrev33();
  EXPECT_EQ(c.out, chamber_report(Y, secondary_fan(Y)));
  Invocation w = run("wall-test" + kBatyrev + " --A 1,0,0,0,0,2,1 --B 1,2,0,0,0,0,1");
  EXPECT_EQ(w.status, 0);
  EXPECT_EQ(w.out, "same chamber no\nfacets 6 6\nwall crossing no\nwall flip\n");
  Invocation same = run("wall-test" + kBatyrev + " --A 1,0,0,0,0,2,1 --B 2,0,0,0,0,4,2");
  EXPECT_EQ(same.status, 0);
  EXPECT_EQ(same.out, "same chamber yes\nfacets 6 6\n");
}

TEST(Cli, FromPrimitiveRelationsWritesTheShippedFan) {
  auto out = scratch("batyrev33.fan");
  Invocation r = run("from-pr '" + kData + "/batyrev33.pr' --out '" + out.string() + "'");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(read_file(out), read_file(kData + "/batyrev33.fan"));
}

TEST(Cli, PolytopeOutputRoundTrips) {
  auto poly = scratch("run1.poly");
  Invocation r = run("realize" + kBatyrev + " --A 1,0,0,0,0,2,1 --B 1,2,0,0,0,0,1 --polytope-out '" + poly.string() + "'");
  ASSERT_EQ(r.status, 0);
  Polytope P = load_polytope(poly.string());
  EXPECT_EQ(P.vertex_count(), 18u);
  EXPECT_NE(read_file(poly).find("# A 1,0,0,0,0,2,1"), std::string::npos);
  Invocation info = run("action-info --polytope '" + poly.string() + "' --coordinate 4");
  ASSERT_EQ(info.status, 0);
  EXPECT_EQ(info.out, r.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("bogus").status, 2);
  EXPECT_EQ(run("describe --fan /nonexistent/file.fan").status, 2);
  EXPECT_EQ(run("realize" + kBatyrev + " --A 1,0,0 --B 1,2,0,0,0,0,1").status, 3);
  EXPECT_EQ(run("realize" + kBatyrev + " --A 1,0,0,0,0,2,1 --B 1,2,0,0,0,0,1 --ell 3").status, 3);
  EXPECT_EQ(run("realize" + kBatyrev + " --A 1,x,0,0,0,2,1 --B 1,2,0,0,0,0,1").status, 2);
  EXPECT_EQ(run("realize" + kBatyrev + " --A=0,0,0,0,0,0,-1 --B 1,2,0,0,0,0,1").status, 3);
}

TEST(Cli, DescribeAndBundle) {
  Invocation d = run("describe --fan '" + kData + "/p2.fan'");
  ASSERT_EQ(d.status, 0);
  EXPECT_FALSE(d.out.empty());
  auto out = scratch("bundle.fan");
  Invocation b = run("bundle --fan '" + kData + "/p2.fan' --summands '0,0,0;0,0,1;0,0,1' --out '" + out.string() + "'");
  ASSERT_EQ(b.status, 0);
  EXPECT_EQ(read_file(out), read_file(kData + "/p2_bundle.fan"));
}
