#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "quadproj/cli.hpp"

namespace quadproj::cli {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

TEST(FormatNumber, SeventeenDigitsAndNoNegativeZero) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(2), "2");
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(-1.5), "-1.5");
}

TEST(Cli, ProjectKnownRows) {
  const CliResult r = run_cli({"project", "--ellipsoid", "2,1,2", "--point", "2,0", "--point", "0,0"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"u,v,x,y,z", "2,0,2,0,0", "0,0,0,0,-2"}));
}

TEST(Cli, ProjectParaboloidOriginIsADomainError) {
  const CliResult r = run_cli({"project", "--paraboloid", "1,1,1", "--point", "0,0"});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_NE(r.err.find("ParaboloidOriginUndefined"), std::string::npos);
}

TEST(Cli, InvertKnownRowsAndPole) {
  const CliResult ok = run_cli({"invert", "--ellipsoid", "2,1,2", "--point", "2,0,0"});
  EXPECT_EQ(ok.code, kSuccess);
  EXPECT_EQ(lines(ok.out), (std::vector<std::string>{"x,y,z,u,v", "2,0,0,2,0"}));

  const CliResult pole = run_cli({"invert", "--ellipsoid", "2,1,2", "--point", "0,0,2"});
  EXPECT_EQ(pole.code, kDomainError);
  EXPECT_NE(pole.err.find("PoleNotProjectable"), std::string::npos);

  const CliResult off = run_cli({"invert", "--ellipsoid", "2,1,2", "--point", "5,0,0"});
  EXPECT_EQ(off.code, kDomainError);
}

TEST(Cli, ProjectReadsAnInputFile) {
  const auto path = std::filesystem::temp_directory_path() / "quadproj_cli_input.csv";
  {
    std::ofstream f(path);
    f << "u,v\n2,0\n\n0,0\n";
  }
  const CliResult r = run_cli({"project", "--ellipsoid", "2,1,2", "--input", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(lines(r.out).size(), 3u);
}

TEST(Cli, SectionRows) {
  const CliResult r = run_cli({"section", "--ellipsoid", "2,1,2", "--d", "1"});
  ASSERT_EQ(r.code, kSuccess);
  const std::vector<std::string> l = lines(r.out);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "ellipse,semi_x,semi_y,plane_height,eccentricity,focal_half_distance,area,perimeter");
  EXPECT_EQ(l[1].rfind("section,1.7320508075688772,0.8660254037844386,1,", 0), 0u);
  EXPECT_EQ(l[2].rfind("projection,3.4641016151377544,1.7320508075688772,0,", 0), 0u);

  EXPECT_EQ(run_cli({"section", "--ellipsoid", "2,1,2", "--d", "2"}).code, kDomainError);
  EXPECT_EQ(run_cli({"section", "--paraboloid", "1,1,1", "--d", "1"}).code, kDomainError);
}

TEST(Cli, MetricsRows) {
  const CliResult r = run_cli({"metrics", "--semi", "2,1", "--t", "0"});
  ASSERT_EQ(r.code, kSuccess);
  const std::vector<std::string> l = lines(r.out);
  ASSERT_GE(l.size(), 5u);
  EXPECT_EQ(l[1].rfind("2,1,0.8660254037844386,1.7320508075688772,6.2831853071795862,9.68844822054769", 0), 0u);
  EXPECT_EQ(l.back(), "0,2");
}

TEST(Cli, VerifyFixturePasses) {
  const CliResult r = run_cli({"verify", "--ellipsoid", "2,1,2", "--d", "1"});
  EXPECT_EQ(r.code, kSuccess);
  const std::vector<std::string> l = lines(r.out);
  ASSERT_EQ(l.size(), 5u);
  for (std::size_t i = 1; i < l.size(); ++i) EXPECT_EQ(l[i].substr(l[i].size() - 4), "true") << l[i];
}

TEST(Cli, VerifyIsDeterministic) {
  const std::vector<std::string> args = {"verify", "--paraboloid", "3,2,2", "--d-sweep", "-1:1:5", "--remark"};
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  EXPECT_EQ(first.code, kSuccess);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, VerifyJsonParses) {
  const CliResult r = run_cli({"verify", "--ellipsoid", "2,1,2", "--d", "1", "--remark", "--format", "json"});
  ASSERT_EQ(r.code, kSuccess);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("all_pass").get<bool>());
  ASSERT_EQ(j.at("reports").size(), 4u);
  EXPECT_EQ(j.at("reports")[2].at("theorem_id"), "T5");
  EXPECT_EQ(j.at("reports")[2].at("expected_ratio").get<double>(), 2.0);
  EXPECT_TRUE(j.at("remark").at("pass").get<bool>());
}

TEST(Cli, ImpossibleToleranceFailsVerification) {
  const CliResult r = run_cli({"verify", "--ellipsoid", "2,1,2", "--d", "1.9", "--tol", "1e-300"});
  EXPECT_EQ(r.code, kVerificationFailed);
}

TEST(Cli, SampleRows) {
  const CliResult r = run_cli({"sample", "--ellipsoid", "2,1,2", "--d", "1", "--samples", "4"});
  EXPECT_EQ(r.code, kSuccess);
  const std::vector<std::string> l = lines(r.out);
  ASSERT_EQ(l.size(), 9u);
  EXPECT_EQ(l[0], "curve,t,x,y,z");
  EXPECT_EQ(l[1], "section,0,1.7320508075688772,0,1");
  EXPECT_EQ(l[5], "projection,0,3.4641016151377544,0,0");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"bogus"}).code, kUsageError);
  EXPECT_EQ(run_cli({"sample", "--ellipsoid", "2,1,2", "--d", "1", "--samples", "2"}).code, kUsageError);
  EXPECT_EQ(run_cli({"project", "--ellipsoid", "0,1,1", "--point", "1,1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"project", "--ellipsoid", "2,1,2", "--paraboloid", "1,1,1", "--point", "1,1"}).code,
            kUsageError);
  EXPECT_EQ(run_cli({"project", "--ellipsoid", "2,1", "--point", "1,1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"project", "--point", "1,1"}).code, kUsageError);
}

TEST(Cli, ShowDefaults) {
  const CliResult r = run_cli({"--show-defaults"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("curvature_samples,360\n"), std::string::npos);
}

TEST(Cli, WritesToAnOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "quadproj_cli_out.csv";
  const CliResult r = run_cli({"project", "--ellipsoid", "2,1,2", "--point", "2,0", "--out", path.string()});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream contents;
  contents << f.rdbuf();
  std::filesystem::remove(path);
  EXPECT_EQ(contents.str(), "u,v,x,y,z\n2,0,2,0,0\n");
}

}  // namespace
}  // namespace quadproj::cli
