#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "regtool/cli.hpp"
#include "regtool/hypergraph.hpp"

using regtool::run_cli;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, GenPipesIntoReg) {
  const auto gen = run({"gen", "hs", "--s", "2"});
  ASSERT_EQ(gen.code, 0);
  const auto reg = run({"reg", "-", "--json"}, gen.out);
  ASSERT_EQ(reg.code, 0) << reg.err;
  const auto j = json_of(reg);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["reg_RI"], 3);
  EXPECT_EQ(j["reg_I"], 4);
  EXPECT_EQ(j["char"], 2);
  EXPECT_EQ(j["capped"], false);
  EXPECT_TRUE(j["certificate"].contains("kind"));
}

TEST(Cli, RegTextMode) {
  const auto r = run({"reg", "-"}, "1 2\n2 3\n3 4\n4 5\n1 5\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reg(R/I) = 2"), std::string::npos);
  EXPECT_NE(r.out.find("reg(I)   = 3"), std::string::npos);
}

TEST(Cli, EveryMethodAgrees) {
  for (const char* method : {"auto", "subsets", "links", "vd"}) {
    const auto r = run({"reg", "-", "--json", "--method", method}, "1 2\n2 3\n3 4\n4 5\n1 5\n");
    ASSERT_EQ(r.code, 0) << method << r.err;
    EXPECT_EQ(json_of(r)["reg_RI"], 2) << method;
  }
}

TEST(Cli, FacetInput) {
  const auto r = run({"reg", "-", "--facets", "--json"}, "a b\nc d\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["reg_RI"], 1);
  const auto vd = run({"reg", "-", "--facets", "--method", "vd"}, "a b\nc d\n");
  EXPECT_EQ(vd.code, 2);
  EXPECT_NE(vd.err.find("sheds"), std::string::npos);
}

TEST(Cli, MaxDegreeCaps) {
  const auto gen = run({"gen", "hs", "--s", "3"});
  const auto r = run({"reg", "-", "--json", "--method", "subsets", "--max-degree", "2"}, gen.out);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["capped"], true);
  EXPECT_EQ(json_of(r)["reg_RI"], 2);
  const auto links = json_of(run({"reg", "-", "--json", "--max-degree", "2"}, gen.out));
  EXPECT_GE(links["reg_RI"], 2);
}

TEST(Cli, CharacteristicFromFlagAndEnvironment) {
  const std::string rp2 = "0 1 2\n0 2 3\n0 3 4\n0 4 5\n0 1 5\n1 2 4\n2 3 5\n1 3 4\n1 3 5\n2 4 5\n";
  EXPECT_EQ(json_of(run({"reg", "-", "--facets", "--json"}, rp2))["reg_RI"], 3);
  EXPECT_EQ(json_of(run({"reg", "-", "--facets", "--json", "--char", "3"}, rp2))["reg_RI"], 2);
  setenv("REGTOOL_CHAR", "3", 1);
  const auto r = run({"reg", "-", "--facets", "--json"}, rp2);
  unsetenv("REGTOOL_CHAR");
  EXPECT_EQ(json_of(r)["reg_RI"], 2);
  EXPECT_EQ(json_of(r)["char"], 3);
  EXPECT_EQ(run({"reg", "-", "--char", "4"}, "a b\n").code, 2);
}

TEST(Cli, Homology) {
  const auto r = run({"homology", "-", "--json"}, "1 2\n2 3\n3 4\n4 5\n1 5\n");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["betti"]["1"], 1);
  EXPECT_EQ(j["betti"]["0"], 0);
  EXPECT_EQ(j["betti"]["-1"], 0);
}

TEST(Cli, Invariants) {
  const auto p4 = run({"invariants", "-", "--json"}, "a b\nb c\nc d\n");
  ASSERT_EQ(p4.code, 0);
  const auto j = json_of(p4);
  EXPECT_EQ(j["nu"], 2);
  EXPECT_EQ(j["nu_min"], 1);
  EXPECT_EQ(j["nu_ind"], 1);
  EXPECT_EQ(j["collage_min"], 1);
  EXPECT_EQ(j["zeta"], 1);
  EXPECT_EQ(j["alpha"], 2);
  const auto hs = json_of(run({"invariants", "-", "--json"}, "x y1 z1\nx y2 z2\n"));
  EXPECT_TRUE(hs["zeta"].is_null());
  EXPECT_TRUE(hs["alpha"].is_null());
  EXPECT_EQ(hs["collage_weight"], 4);
}

TEST(Cli, Vd) {
  const auto r = run({"vd", "-", "--json"}, "1 2\n2 3\n3 4\n4 5\n1 5\n");
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["vd"], true);
  EXPECT_EQ(j["scm"], true);
  EXPECT_EQ(j["cm"], true);
  EXPECT_EQ(j["shedding_order"].size(), 3U);
  const auto no = json_of(run({"vd", "-", "--facets", "--json"}, "a b\nc d\n"));
  EXPECT_EQ(no["vd"], false);
  EXPECT_TRUE(no.contains("failure_witness"));
}

TEST(Cli, VerifyIsDeterministicAndPasses) {
  const std::vector<std::string> args{"verify", "--family", "random-graph", "--n", "7", "--trials", "5",
                                      "--seed", "7", "--json"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = json_of(a);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_GT(j["reports"].size(), 0U);
  for (const auto& r : j["reports"]) {
    EXPECT_TRUE(r["outcome"] == "pass" || r["outcome"] == "skipped");
    if (r["outcome"] == "skipped") {
      EXPECT_EQ(r["hypothesis"], false);
    }
  }
}

TEST(Cli, VerifySingleCharacteristic) {
  const auto j = json_of(run({"verify", "--family", "cycle", "--n", "5", "--char", "3", "--json"}));
  for (const auto& r : j["reports"]) EXPECT_EQ(r["char"], 3);
}

TEST(Cli, GenRoundTripsLosslessly) {
  for (const char* family : {"hs", "cycle", "path", "complete", "star", "random-uniform", "random-graph"}) {
    const auto gen = run({"gen", family, "--n", "6", "--seed", "4"});
    ASSERT_EQ(gen.code, 0) << family;
    EXPECT_EQ(regtool::to_text(regtool::parse_hypergraph(gen.out)), gen.out) << family;
  }
  const auto complex = run({"gen", "random-complex", "--n", "6", "--m", "4", "--seed", "2"});
  ASSERT_EQ(complex.code, 0);
  EXPECT_EQ(run({"reg", "-", "--facets"}, complex.out).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"reg", "/nonexistent/file.txt"}).code, 2);
  EXPECT_EQ(run({"reg"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"reg", "-", "--method", "magic"}, "a b\n").code, 2);
  EXPECT_EQ(run({"reg", "-"}, "").code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"gen", "mystery"}).code, 2);
  std::string wide;
  for (int i = 0; i < 65; ++i) wide += "v" + std::to_string(i) + " hub\n";
  const auto r = run({"reg", "-"}, wide);
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}
