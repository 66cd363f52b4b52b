#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_models.hpp"

namespace tetrad::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tetrad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return std::string(TETRAD_GOLDEN_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tetrad_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesCanonicalModel) {
  const auto r = invoke({"gen", "--q", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, slurp(golden("pg3_q2.model")));
  EXPECT_EQ(invoke({"gen", "--q", "3", "--out", path("m.txt")}).code, kOk);
  EXPECT_EQ(slurp(path("m.txt")), slurp(golden("pg3_q3.model")));
}

TEST_F(CliTest, GenRejectsBadOrder) {
  const auto r = invoke({"gen", "--q", "4"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("q must be prime"), std::string::npos);
  EXPECT_EQ(invoke({"gen", "--q", "11"}).code, kUsageError);
  EXPECT_EQ(invoke({"gen"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
}

TEST_F(CliTest, CheckExitCodes) {
  // Characteristic 2: axioms hold, harmonicity does not.
  EXPECT_EQ(invoke({"check", "--in", golden("pg3_q2.model")}).code, kHarmonicityFailure);
  EXPECT_EQ(invoke({"check", "--in", golden("pg3_q3.model")}).code, kOk);
  write("pencil.txt", "incidence-model v1\nlines 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(invoke({"check", "--in", path("pencil.txt")}).code, kAxiomFailure);
  write("bad.txt", "incidence-model v1\nlines 3\n0 1\n1 1\n");
  const auto bad = invoke({"check", "--in", path("bad.txt")});
  EXPECT_EQ(bad.code, kInputError);
  EXPECT_NE(bad.err.find(":4:1: reflexive pair must be omitted"), std::string::npos) << bad.err;
  EXPECT_EQ(invoke({"check", "--in", path("missing.txt")}).code, kInputError);
  EXPECT_EQ(invoke({"check", "--in", golden("pg3_q2.model"), "--mode", "bogus"}).code,
            kUsageError);
}

TEST_F(CliTest, CheckReproducesGoldenReport) {
  for (const char* q : {"2", "3"}) {
    const auto r = invoke({"check", "--in", golden(std::string("pg3_q") + q + ".model")});
    EXPECT_EQ(r.out, slurp(golden(std::string("pg3_q") + q + ".report.json")));
  }
}

TEST_F(CliTest, SampledCheckIsByteIdenticalPerSeed) {
  const std::vector<std::string> args{"check", "--in", golden("pg3_q3.model"), "--mode",
                                      "sample", "--samples", "500", "--seed", "77"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.err.empty());
  // Without a seed one is drawn and announced.
  const auto c = invoke({"check", "--in", golden("pg3_q2.model"), "--mode", "sample",
                         "--samples", "50"});
  EXPECT_EQ(c.err.rfind("seed: ", 0), 0u) << c.err;
}

TEST_F(CliTest, ClassifyPrintsClasses) {
  const auto& m = testing::pg(2).model;
  auto from_e0 = [&](std::array<std::uint32_t, 4> to) {
    return std::to_string(testing::line_through(m, {1, 0, 0, 0}, to));
  };
  const auto o = from_e0({0, 1, 0, 0}), p = from_e0({0, 0, 1, 0}), q = from_e0({0, 0, 0, 1}),
             r = from_e0({0, 1, 1, 1}), pencil = from_e0({0, 1, 1, 0});
  const auto model = golden("pg3_q2.model");
  EXPECT_EQ(invoke({"classify", "--in", model, o, p, pencil}).out, "FLAT_PENCIL\n");
  const auto triad = invoke({"classify", "--in", model, o, p, q}).out;
  EXPECT_TRUE(triad == "PLANE_TRIAD\n" || triad == "POINT_TRIAD\n") << triad;
  const auto t = invoke({"classify", "--in", model, o, p, q, r});
  EXPECT_EQ(t.code, kOk);
  EXPECT_NE(t.out.find("_TETRAD diagonals=["), std::string::npos) << t.out;
  EXPECT_NE(t.out.find("diagonal_class=FLAT_PENCIL harmonic=false"), std::string::npos) << t.out;
  EXPECT_EQ(invoke({"classify", "--in", model, o, p, pencil, q}).out, "PARTIAL\n");
  EXPECT_EQ(invoke({"classify", "--in", model, o, p}).code, kUsageError);
  EXPECT_EQ(invoke({"classify", "--in", model, o, p, "999"}).code, kUsageError);
}

TEST_F(CliTest, DualNeedsCoordinates) {
  const auto r = invoke({"dual", "--q", "2", "--format", "text"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("involution: pass (35 cases)"), std::string::npos) << r.out;
  EXPECT_EQ(invoke({"dual", "--in", golden("pg3_q2.model")}).code, kOk);
  write("plain.txt", "incidence-model v1\nlines 2\n0 1\n");
  const auto u = invoke({"dual", "--in", path("plain.txt")});
  EXPECT_EQ(u.code, kUsageError);
  EXPECT_NE(u.err.find("unsupported operation"), std::string::npos);
  const auto s = invoke({"dual", "--q", "3", "--seed", "5"});
  EXPECT_EQ(s.code, kOk);
  EXPECT_NE(s.out.find("\"status\": \"pass\""), std::string::npos);
}

TEST_F(CliTest, ReportRendersText) {
  const auto r = invoke({"report", "--in", golden("pg3_q3.report.json")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("model: 130 lines, 3120 incident pairs"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("ALL_HOLD"), std::string::npos);
  const auto j = invoke({"report", "--in", golden("pg3_q3.report.json"), "--format", "json"});
  EXPECT_EQ(j.out, slurp(golden("pg3_q3.report.json")));
  write("junk.json", "{oops");
  EXPECT_EQ(invoke({"report", "--in", path("junk.json")}).code, kInputError);
}

TEST_F(CliTest, ExecutableRuns) {
  const std::string cmd = std::string(TETRAD_TOOL_PATH) + " gen --q 2 --out " + path("x.model");
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(slurp(path("x.model")), slurp(golden("pg3_q2.model")));
  const std::string check = std::string(TETRAD_TOOL_PATH) + " check --in " + path("x.model") +
                            " --out " + path("r.json");
  const int status = std::system(check.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kHarmonicityFailure);
}

}  // namespace
}  // namespace tetrad::cli
