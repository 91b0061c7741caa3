#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <sstream>

#include "minfol/cli.hpp"

using minfol::report::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = minfol::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, ClassifyCatMap) {
  const auto j = run_json({"classify", "--matrix", "2 1 1 1", "--periodic", "2", "--decompose"});
  EXPECT_EQ(j["schema_version"], "1.0");
  EXPECT_EQ(j["command"], "classify");
  const auto& r = j["results"];
  EXPECT_EQ(r["class"], "Anosov");
  EXPECT_EQ(r["lambda"]["exact"], "(3 + sqrt(5))/2");
  EXPECT_EQ(r["lambda_plus_inverse"]["exact"], "3");
  EXPECT_EQ(r["periodic_points"]["count"], 5);
  EXPECT_EQ(r["decomposition"]["product_matches"], true);
  EXPECT_EQ(r["exact"], true);
}

TEST(Cli, PillowcaseReport) {
  const auto j = run_json({"cover", "pillowcase", "--d", "4", "--a", "1,1,1,1"});
  EXPECT_EQ(j["results"]["genus"], 3);
  EXPECT_EQ(j["results"]["torus_profile"]["degree"], 8);
  EXPECT_EQ(j["results"]["torus_profile"]["branch_points"][0]["fibre"], Json::array({2, 2, 2, 2}));
}

TEST(Cli, PipelineFrw) {
  const auto j = run_json({"pipeline", "frw", "--matrix", "2 1 1 1", "--origami", "wollmilchsau"});
  const auto& r = j["results"];
  EXPECT_EQ(r["origami"]["genus"], 3);
  EXPECT_EQ(r["lift"]["verified"], true);
  const int k = r["torelli"]["k"];
  EXPECT_LE(k, 4);
  EXPECT_EQ(r["torelli"]["b1"], k + 1);
  EXPECT_EQ(r["homology_action"]["symplectic"], true);
  EXPECT_EQ(r["mapping_torus"]["geometry"], "H3");
  EXPECT_EQ(r["leaf_growth"]["strictly_decreasing"], true);
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run_json({"origami", "build", "--right", "(1 2)", "--up", "()"})["results"]["genus"], 1);
  EXPECT_EQ(run_json({"origami", "act", "--origami", "wollmilchsau", "--word", "T S"})["results"]["image"]["genus"], 3);
  EXPECT_EQ(run_json({"origami", "lift", "--origami", "torus", "--matrix", "2 1 1 1"})["results"]["lifts"], true);
  EXPECT_EQ(run_json({"cover", "double", "--n", "4"})["results"]["genus"], 3);
  EXPECT_EQ(run_json({"cover", "growth", "--d", "2", "--profile", "1:2", "--k", "5"})["results"]["chi"],
            Json::array({1, 0, -1, -2, -3}));
  EXPECT_EQ(run_json({"cover", "rh", "--degree", "2", "--fibre", "2", "--fibre", "2"})["results"]["genus"], 2);
  EXPECT_EQ(run_json({"cover", "monodromy", "--base", "sphere", "--degree", "3", "--alpha", "(1 2 3)", "--alpha",
                      "(1 2 3)"})["results"]["genus"],
            1);
  EXPECT_EQ(run_json({"homology", "basis", "--origami", "wollmilchsau"})["results"]["rank"], 6);
  EXPECT_EQ(run_json({"homology", "action", "--origami", "torus", "--matrix", "2 1 1 1"})["results"]["matrix"],
            Json::parse("[[2,1],[1,1]]"));
  EXPECT_EQ(run_json({"homology", "torelli", "--M", "1 1; 0 1"})["results"]["k"], 1);
  EXPECT_EQ(run_json({"torus3", "geometry", "--matrix", "2 1 1 1"})["results"]["geometry"], "Sol");
  EXPECT_EQ(run_json({"torus3", "geometry", "--genus", "3", "--class", "PseudoAnosov"})["results"]["geometry"], "H3");
  EXPECT_EQ(run_json({"torus3", "euler", "--genus", "2", "--e", "3"})["results"]["milnor_wood_ok"], false);
  EXPECT_EQ(run_json({"torus3", "euler", "--genus", "2", "--e", "-2"})["results"]["abs_euler_class"], 2);
  EXPECT_EQ(run_json({"torus3", "periods", "--periods", "1/2,0;1/3,0;1/6,0"})["results"]["r"], 1);
  const auto rep = run_json({"torus3", "report", "--matrix", "2 1 1 1", "--origami", "wollmilchsau", "--euler-genus",
                             "2", "--euler", "1"});
  EXPECT_EQ(rep["results"]["geometry"]["geometry"], "H3");
  EXPECT_EQ(rep["results"]["euler"]["milnor_wood_ok"], true);
  const auto orbit = run_json({"holonomy", "orbit", "--gens", "rot:0.25", "--steps", "100", "--eps", "0.1"});
  EXPECT_EQ(orbit["results"]["max_gap"], 0.25);
  EXPECT_EQ(orbit["results"]["exact"], false);
  const auto stab = run_json({"holonomy", "stabilizer", "--gens", "aff:k=1,b=0;aff:k=0,b=1", "--x", "-1"});
  EXPECT_EQ(stab["results"]["structure"], "CyclicEvidence");
  EXPECT_EQ(stab["results"]["primitive"]["word"], "g1 g2");
  EXPECT_EQ(run_json({"holonomy", "rotnum", "--word", "rot:0.3", "--n", "1000"})["results"]["units"], "turns (R/Z)");
  EXPECT_EQ(run_json({"holonomy", "commutator", "--pair", "mob:2,1,1,1;mob:2,1,1,1"})["results"]["ok"], true);
  EXPECT_EQ(run_json({"pipeline", "double", "--n", "2"})["results"]["genus"], 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"classify"}).code, 1);
  EXPECT_EQ(run({"origami", "build", "--right", "(1 2", "--up", "()"}).code, 1);
  EXPECT_EQ(run({"classify", "--matrix", "2 1 1"}).code, 1);
  const auto det = run({"classify", "--matrix", "2 0 0 1"});
  EXPECT_EQ(det.code, 2);
  EXPECT_NE(det.err.find("det"), std::string::npos);
  EXPECT_TRUE(det.out.empty());
  const auto odd = run({"cover", "double", "--n", "3"});
  EXPECT_EQ(odd.code, 2);
  EXPECT_NE(odd.err.find("parity"), std::string::npos);
  EXPECT_EQ(run({"origami", "build", "--right", "(1 2)", "--up", "(3 4)"}).code, 2);
  EXPECT_EQ(run({"torus3", "euler", "--genus", "1", "--e", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"holonomy", "--help"}).code, 0);
}

TEST(Cli, ByteIdenticalReruns) {
  const std::vector<std::vector<std::string>> cmds{
      {"pipeline", "frw", "--matrix", "2 1 1 1", "--origami", "wollmilchsau"},
      {"holonomy", "orbit", "--gens", "dbl;rot:0.41421356237309503", "--steps", "20000", "--eps", "0.001", "--seed", "5"},
      {"holonomy", "orbit", "--gens", "dbl;rot:0.41421356237309503", "--steps", "2000", "--cells", "6", "--threads", "3"},
      {"classify", "--matrix", "5 8 3 5", "--periodic", "3", "--decompose"},
      {"--tsv", "cover", "pillowcase", "--d", "6", "--a", "1,1,1,3"}};
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, TsvOutput) {
  const auto r = run({"--tsv", "cover", "double", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("results.genus\t2\n"), std::string::npos);
  EXPECT_NE(r.out.find("command\tcover double\n"), std::string::npos);
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = MINFOL_BINARY;
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  EXPECT_EQ(status("classify --matrix '2 1 1 1'"), 0);
  EXPECT_EQ(status("classify --matrix '2 0 0 1'"), 2);
  EXPECT_EQ(status("nosuchcommand"), 1);
}

TEST(Cli, SeedFromEnvironment) {
  const std::vector<std::string> cmd{"holonomy", "orbit", "--gens", "dbl;rot:0.3", "--steps", "500"};
  ::setenv("MINFOL_SEED", "17", 1);
  const auto a = run_json(cmd);
  ::unsetenv("MINFOL_SEED");
  EXPECT_EQ(a["provenance"]["seed"], 17);
  auto explicit_cmd = cmd;
  explicit_cmd.insert(explicit_cmd.end(), {"--seed", "17"});
  EXPECT_EQ(run_json(explicit_cmd)["results"], a["results"]);
}
