#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "skewdg/cli.hpp"
#include "skewdg/resolution.hpp"
#include "skewdg/serialize.hpp"

using namespace skewdg;

namespace {

struct CliRun {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& body) {
  auto dir = std::filesystem::temp_directory_path() / "skewdg_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << body;
  return path.string();
}

std::string matrix_file(const std::string& name, const std::vector<std::vector<long>>& rows) {
  return write_file(name, dump(matrix_json(Mat::from_ints(rows)), false));
}

}  // namespace

TEST(Cli, ClassifyNonSmooth) {
  CliRun r = run_cli({"classify", matrix_file("ns.json", {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}})});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["calabi_yau"], false);
  EXPECT_EQ(j["koszul"], true);
  EXPECT_EQ(j["smooth"], false);
}

TEST(Cli, ExtCase124) {
  CliRun r = run_cli({"ext", matrix_file("c124.json", {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["dim"], 8);
  EXPECT_EQ(j["recognized"], "k[x]/(x^8)");
  EXPECT_EQ(j["frobenius"], true);
}

TEST(Cli, IsoE12E13) {
  CliRun r = run_cli({"iso", matrix_file("e12.json", {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
                   matrix_file("e13.json", {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["status"], "witness");
  EXPECT_EQ(j["witness"]["perm"], Json::parse("[1,3,2]"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"classify", write_file("bad.json", "{\"matrix\": [[\"1\",\"x\"]]}")}).code, 1);
  EXPECT_EQ(run_cli({"classify", write_file("trunc.json", "{\"matrix\": ")}).code, 1);
  EXPECT_EQ(run_cli({"classify", "/nonexistent/m.json"}).code, 1);
  EXPECT_EQ(run_cli({"nosuchcommand"}).code, 1);
  CliRun nd = run_cli({"resolve", matrix_file("nd.json", {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})});
  EXPECT_EQ(nd.code, 2);
  EXPECT_EQ(Json::parse(nd.err)["error"], "unsupported");
  EXPECT_EQ(run_cli({"ext", matrix_file("ns2.json", {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}})}).code, 2);
}

TEST(Cli, ResolveVerify) {
  CliRun r = run_cli({"resolve", matrix_file("ex11.json", {{1, 0, 1}, {0, 1, 0}, {1, 0, 1}}), "--verify", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["size"], 3);
  EXPECT_EQ(j["verify"]["exact"], true);
  EXPECT_EQ(resolution_from_json(j).size, 3u);
}

TEST(Cli, ResolveRoundTripIsByteStable) {
  CliRun r = run_cli({"resolve", matrix_file("c124b.json", {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})});
  ASSERT_EQ(r.code, 0);
  SemifreeResolution back = resolution_from_json(r.json());
  EXPECT_EQ(dump(resolution_json(back), false) + "\n", r.out);
  EXPECT_EQ(run_cli({"resolve", matrix_file("c124b.json", {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})}).out, r.out);
}

TEST(Cli, ReportCompareShowsNonQuasiIsomorphism) {
  CliRun r = run_cli({"report", matrix_file("a.json", {{1, 0, 1}, {0, 1, 0}, {1, 0, 1}}), "--max-degree", "6",
                   "--compare", matrix_file("b.json", {{0, 0, 1}, {0, 1, 0}, {0, 0, 0}})});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  Json j = r.json();
  EXPECT_EQ(j["consistent"], true);
  EXPECT_EQ(j["cohomology_dims"], Json::parse("[1,1,1,1,1,1,1]"));
  EXPECT_EQ(j["compare"]["same_cohomology_dims"], true);
  EXPECT_EQ(j["compare"]["ext_dims"], Json::parse("[3,4]"));
  EXPECT_EQ(j["compare"]["non_quasi_isomorphic"], true);
}

TEST(Cli, ReportFlagsNonSmoothFamily) {
  CliRun r = run_cli({"report", matrix_file("ns3.json", {{1, 1, 0}, {1, 1, 0}, {1, 1, 0}}), "--max-degree", "4"});
  EXPECT_EQ(r.code, 3);
  Json j = r.json();
  EXPECT_EQ(j["consistent"], false);
  EXPECT_EQ(j["cocycle_killing"]["size"], 6);
}

TEST(Cli, ValidateAndFrobenius) {
  CliRun v = run_cli({"validate", matrix_file("v.json", {{1, -2, 3}, {0, 1, 1}, {2, 0, -1}}), "--max-degree", "5"});
  ASSERT_EQ(v.code, 0);
  EXPECT_EQ(v.json()["square_zero"], true);
  std::string alg = write_file("alg.json", dump(algebra_json(sklyanin_e(1, 1, 1)), false));
  CliRun f = run_cli({"frobenius", alg, "--pretty"});
  ASSERT_EQ(f.code, 0);
  EXPECT_EQ(f.json()["frobenius"], false);
}
