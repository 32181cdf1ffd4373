#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "eamod/cli/app.hpp"
#include "eamod/eamod.hpp"

using namespace eamod;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eamod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("eamod_cli_" + name)).string();
}

std::string build(const std::string& name, std::vector<std::string> args) {
  const std::string path = temp_path(name);
  args.insert(args.begin(), "build");
  args.push_back("--out");
  args.push_back(path);
  const Result r = run_cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return path;
}

}  // namespace

TEST(Cli, BuildKinds) {
  EXPECT_EQ(read_module_file(build("d1.json", {"d1", "--p", "3", "--k", "3"})).dim(), 7u);
  EXPECT_EQ(read_module_file(build("dr.json", {"dr", "--p", "3", "--k", "3", "-r", "2"})).dim(), 21u);
  EXPECT_EQ(read_module_file(build("benson.json", {"benson", "--p", "3", "--lambda", "0", "--mu", "1"})).dim(), 3u);
  EXPECT_EQ(read_module_file(build("reg.json", {"regular", "--p", "3", "--k", "2"})).dim(), 9u);
  EXPECT_EQ(read_module_file(build("lin.json", {"linear", "--p", "3", "--k", "2", "--ext", "2", "--span", "1,w"})).dim(),
            3u);
  const std::string d1k2 = build("d1k2.json", {"d1", "--p", "3", "--k", "2"});
  EXPECT_EQ(read_module_file(build("w2.json", {"wedge", "--in", d1k2, "-r", "2"})).dim(), 6u);
  EXPECT_EQ(read_module_file(build("sum.json", {"sum", "--in", d1k2, "--in", d1k2})).dim(), 8u);
  EXPECT_EQ(read_module_file(build("ten.json", {"tensor", "--in", d1k2, "--in", d1k2})).dim(), 16u);
  EXPECT_EQ(read_module_file(build("dual.json", {"dual", "--in", d1k2})).dim(), 4u);
  const std::string triv = build("triv.json", {"linear", "--p", "3", "--k", "1", "--span", "1"});
  EXPECT_EQ(read_module_file(build("ind.json", {"induce", "--in", triv, "--embed", "1,1", "--k", "2"})).dim(), 3u);
}

TEST(Cli, BuildToStdoutEchoesOnStderr) {
  const Result r = run_cli({"build", "d1", "--p", "3", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(module_from_json(Json::parse(r.out)).dim(), 4u);
  EXPECT_NE(r.err.find("dim 4"), std::string::npos);
  EXPECT_NE(r.err.find("valid"), std::string::npos);
}

TEST(Cli, Queries) {
  const std::string d1 = build("q_d1.json", {"d1", "--p", "3", "--k", "3"});
  Result r = run_cli({"jordan", d1, "--alpha", "1,1,w", "--ext", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["type"], "[3][3][1]");

  const std::string d2 = build("q_d2.json", {"dr", "--p", "3", "--k", "2", "-r", "2"});
  r = run_cli({"variety", d2, "--poly", "pk", "--compare", "--ext", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["verdict"], "Equal");

  r = run_cli({"variety", d2, "--ext", "2", "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "coords,type,free");

  const std::string d21 = build("q_d21.json", {"dr", "--p", "3", "--k", "3", "-r", "2"});
  r = run_cli({"decompose", d21, "--trials", "60", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["status"], "NoSplitFound(60)");

  r = run_cli({"generic", d21});
  EXPECT_EQ(Json::parse(r.out)["type"], "[3][3][3][3][3][3][3]");

  const std::string reg = build("q_reg.json", {"regular", "--p", "3", "--k", "2"});
  r = run_cli({"projective", reg});
  EXPECT_EQ(Json::parse(r.out)["is_projective"], true);
  EXPECT_EQ(Json::parse(r.out)["free_summands"], 1);

  r = run_cli({"green", d2, "--ext", "2"});
  EXPECT_EQ(Json::parse(r.out)["witness"], "(1,w)");
}

TEST(Cli, ReportsAreByteIdentical) {
  const std::string d21 = build("det_d21.json", {"dr", "--p", "3", "--k", "3", "-r", "2"});
  const Result a = run_cli({"decompose", d21, "--trials", "10", "--seed", "3"});
  const Result b = run_cli({"decompose", d21, "--trials", "10", "--seed", "3"});
  EXPECT_EQ(a.out, b.out);
  const Result c = run_cli({"verify", "--suite", "decomp-k2"});
  const Result d = run_cli({"verify", "--suite", "decomp-k2"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, VerifySuites) {
  Result r = run_cli({"verify", "--suite", "main-thm", "--p", "3", "--k", "2", "--ext", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["passed"], true);
  for (const auto& c : j["checks"]) {
    EXPECT_FALSE(c["paper_anchor"].get<std::string>().empty());
    EXPECT_EQ(c["pass"], c["expected"] == c["actual"]);
  }

  r = run_cli({"verify", "--suite", "explore-k1modp", "--p", "3", "--k", "4", "--ext", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["checks"][0]["exploratory"], true);

  // at p = 3 the generic type matches but the maximal-set description does not
  r = run_cli({"verify", "--suite", "jtd1", "--p", "3", "--k", "3"});
  EXPECT_EQ(r.code, 1);
  const Json jt = Json::parse(r.out);
  EXPECT_EQ(jt["checks"][0]["actual"], "[3][3][1]");
  EXPECT_EQ(jt["checks"][0]["pass"], true);
  EXPECT_EQ(jt["checks"][1]["actual"], "ProperSubset");

  r = run_cli({"verify", "--suite", "jtd1", "--p", "5", "--k", "3"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"build", "d1", "--p", "3"}).code, 2);
  EXPECT_EQ(run_cli({"build", "nope", "--p", "3"}).code, 2);
  const std::string d1 = build("u_d1.json", {"d1", "--p", "3", "--k", "3"});
  const Result r = run_cli({"jordan", d1, "--alpha", "1,1,x", "--ext", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ParseFailure"), std::string::npos);
  EXPECT_NE(r.err.find("position 4"), std::string::npos);
  EXPECT_EQ(run_cli({"projective", temp_path("does-not-exist.json")}).code, 2);
}

TEST(Cli, LibraryErrorsExitOne) {
  const std::string d1 = build("e_d1.json", {"d1", "--p", "3", "--k", "3"});
  const Result r = run_cli({"variety", d1, "--ext", "8"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("TooLarge"), std::string::npos);
}
