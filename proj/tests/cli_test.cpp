#include "racah/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>

namespace racah {
namespace {

using cli::run;
using cli::Status;

TEST(Cli, GoldenTranscripts) {
  auto r = run({"reduce", "B*A"});
  EXPECT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.out, "A B - 2 D\n");
  EXPECT_EQ(r.err, "");

  r = run({"eq", "Omega_B - Omega_C", "alpha + alpha*delta"});
  EXPECT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.out, "equal: true\n");

  r = run({"center", "--bound", "2"});
  EXPECT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.out, "bound: 2\nkernel_dimension: 10\nexpected_dimension: 10\nmatches: true\n");
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"degree", "D"}).out, "2\n");
  EXPECT_EQ(run({"degree", "A - A"}).out, "-inf\n");
  EXPECT_EQ(run({"leading", "B A"}).out,
            "tuple: (1, 0, 1, 0, 0, 0)\ncoefficient: 1\nterm: A B\n");
  EXPECT_EQ(run({"apply", "sigma", "A D"}).out, "D B\n");
  EXPECT_EQ(run({"apply", "tau", "D"}).out, "-D\n");
  EXPECT_EQ(run({"reduce", "--", "-A"}).out, "-A\n");

  auto conf = run({"confluence"});
  EXPECT_EQ(conf.status, Status::Ok);
  EXPECT_NE(conf.out.find("B D A: resolvable\n"), std::string::npos);
  EXPECT_NE(conf.out.find("overlaps: 20, resolvable: 20\n"), std::string::npos);

  auto list = run({"list-suites"});
  EXPECT_EQ(list.out.substr(0, 14), "presentations\n");
  EXPECT_EQ(list.out.substr(list.out.size() - 4), "all\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"reduce", "B A"}).exit_code(), 0);
  EXPECT_EQ(run({"eq", "A", "B"}).exit_code(), 1);
  EXPECT_EQ(run({"eq", "A", "B"}).out, "equal: false\ndifference: A - B\n");
  EXPECT_EQ(run({"reduce", "E"}).exit_code(), 2);
  EXPECT_EQ(run({"reduce", "(A"}).exit_code(), 2);
  EXPECT_EQ(run({"reduce", "1/0"}).exit_code(), 2);
  EXPECT_EQ(run({"verify", "nosuch"}).exit_code(), 2);
  EXPECT_EQ(run({"center", "--bound", "9"}).exit_code(), 2);
  EXPECT_EQ(run({"apply", "rho", "A"}).exit_code(), 2);
  EXPECT_EQ(run({"leading", "0"}).exit_code(), 2);
  EXPECT_EQ(run({}).exit_code(), 2);
  EXPECT_EQ(run({"--fuel", "3", "reduce", "B^3 A^3"}).exit_code(), 2);

  auto bad = run({"reduce", "A + $"});
  EXPECT_EQ(bad.out, "");
  EXPECT_EQ(bad.err, "error: lex error at offset 4: unexpected character '$'\n");
}

TEST(Cli, VerifySuite) {
  auto r = run({"verify", "bda"});
  EXPECT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.out, "PASS bda: B D A normal form\n1/1 checks passed\n");
}

TEST(Cli, VerifyAll) {
  auto r = run({"verify", "all"});
  EXPECT_EQ(r.status, Status::Ok) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, DeterministicTextOutput) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"reduce", "Omega_A^2"}, {"center", "--bound", "3", "--basis"},
           {"verify", "leading-terms"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, JsonSchema) {
  auto r = run({"--format", "json", "reduce", "B*A"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "reduce");
  EXPECT_EQ(j["inputs"]["expr"], "B*A");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["result"], "A B - 2 D");

  j = nlohmann::json::parse(run({"--format", "json", "center", "--bound", "1"}).out);
  EXPECT_EQ(j["kernel_dimension"], 4);
  EXPECT_EQ(j["matches"], true);

  j = nlohmann::json::parse(run({"--format", "json", "verify", "confluence"}).out);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_TRUE(j["checks"][0].contains("name"));
  EXPECT_EQ(j["checks"][0]["pass"], true);
  EXPECT_TRUE(j["checks"][0]["elapsed_ms"].is_number());

  r = run({"--format", "json", "reduce", "E"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "error");
  EXPECT_EQ(j["inputs"]["expr"], "E");
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(Cli, ConfigFile) {
  const char* path = "racah_cli_test.ini";
  {
    std::ofstream f(path);
    f << "format = json\nfuel = 5\n";
  }
  auto r = run({"--config", path, "reduce", "B A"});
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"], "A B - 2 D");
  EXPECT_EQ(run({"--config", path, "reduce", "B^3 A^3"}).exit_code(), 2);
  // flags override the file
  EXPECT_EQ(run({"--config", path, "--format", "text", "reduce", "B A"}).out, "A B - 2 D\n");
  std::remove(path);
}

} // namespace
} // namespace racah
