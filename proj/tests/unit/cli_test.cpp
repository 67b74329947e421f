#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "msslab/cli/app.hpp"
#include "msslab/cli/config.hpp"
#include "msslab/cli/report.hpp"

namespace msslab::cli {
namespace {

namespace fs = std::filesystem;

std::string fixture() { return std::string(MSSLAB_FIXTURE_DIR) + "/paper-example.json"; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "msslab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("msslab-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

std::string parse_error_where(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "no error";
}

TEST(ConfigParse, Fixture) {
  const Config c = parse_config(slurp(fixture()));
  EXPECT_EQ(c.universe.size(), 4U);
  EXPECT_EQ(c.granulation_source, "predecessor");
  ASSERT_TRUE(c.granulation);
  EXPECT_EQ(c.granulation->granules().size(), 4U);
  EXPECT_EQ(c.deltas.size(), 4U);
  ASSERT_TRUE(c.clustering);
  EXPECT_EQ(c.clustering->size(), 3U);
  EXPECT_FALSE(c.seed);
}

TEST(ConfigParse, SyntaxErrorsCarryLineAndColumn) {
  EXPECT_EQ(parse_error_where("{\n  \"universe\": [\"a\",]\n}"), "line 2, column 20");
}

TEST(ConfigParse, FieldErrorsCarryPaths) {
  EXPECT_EQ(parse_error_where(R"({})"), "/universe");
  EXPECT_EQ(parse_error_where(R"({"universe": ["a"], "colour": 1})"), "/colour");
  EXPECT_EQ(parse_error_where(R"({"universe": ["a"], "granulation": "predecessor"})"), "/granulation");
  EXPECT_EQ(parse_error_where(R"({"universe": ["a","b"], "relation": {"pairs": [["a","b"]]}, "granulation": [["a"]]})"),
            "/granulation");
  EXPECT_EQ(parse_error_where(R"({"universe": ["a","b"], "clustering": [["a"], ["c"]]})").rfind("/clustering/1", 0),
            0U);
  EXPECT_EQ(parse_error_where(R"({"universe": ["a"], "delta": "E2"})"), "/delta");
  EXPECT_EQ(parse_error_where(R"({"universe": ["a"], "delta": ["E0", "E0"]})"), "/delta/1");
  EXPECT_EQ(parse_error_where(R"({"universe": ["a"], "compatibility_modes": ["nearest"]})"), "/compatibility_modes/0");
  EXPECT_EQ(parse_error_where(R"({"universe": ["a"], "difference_policy": "loose"})"), "/difference_policy");
  EXPECT_EQ(parse_error_where(R"({"universe": ["a", "a"]})"), "/universe");
}

TEST(ConfigParse, DeltaForms) {
  const Config c = parse_config(R"({
    "universe": ["a", "b"],
    "relation": {"pairs": [["a", "a"], ["b", "b"]]},
    "delta": ["E1", {"name": "t", "extensional": [[[], ["a"], ["b"]]]}, {"name": "m", "def0": {"f": "union"}}],
    "sum": "granular-sum",
    "reduct": ["P", "delta"],
    "seed": 9,
    "trans1_reading": "positive"
  })");
  ASSERT_EQ(c.deltas.size(), 3U);
  EXPECT_EQ(c.deltas[1].name(), "t");
  EXPECT_EQ(c.deltas[1].kind(), DeltaKind::Extensional);
  EXPECT_EQ(c.deltas[1].table()->size(), 1U);
  EXPECT_EQ(c.deltas[2].kind(), DeltaKind::Def0);
  EXPECT_EQ(c.seed, 9U);
  EXPECT_EQ(c.trans1, Trans1Reading::Positive);
  ASSERT_TRUE(c.reduct);
  EXPECT_EQ(c.reduct->size(), 2U);
}

TEST(SearchSpecParse, FieldsAndErrors) {
  bool seeded = false;
  const SearchSpec s = parse_search_spec(
      R"({"n": 2, "family": "relations", "delta": "E0", "required": "i-coh", "forbidden": ["n-coh"], "seed": 3})",
      &seeded);
  EXPECT_TRUE(seeded);
  EXPECT_EQ(s.delta, DeltaKind::E0);
  EXPECT_EQ(s.required, std::vector<std::string>{"i-coh"});
  EXPECT_EQ(s.forbidden, std::vector<std::string>{"n-coh"});
  try {
    parse_search_spec(R"({"n": 2, "required": ["i-coh", "g7"]})");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), "/required/1");
  }
}

TEST(Cli, CheckAxiomsOnFixture) {
  const CliRun r = run_cli({"check-axioms", fixture()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "check-axioms");
  EXPECT_EQ(j["provenance"]["seed"], 0);
  ASSERT_EQ(j["structures"].size(), 4U);
  EXPECT_EQ(j["structures"][1]["delta"], "E1");
  EXPECT_TRUE(replay_report(j, parse_config(slurp(fixture()))).empty());
}

TEST(Cli, StrictExitSignalsFailures) {
  EXPECT_EQ(run_cli({"check-axioms", "--strict-exit", fixture()}).code, kExitFailure);
  EXPECT_EQ(run_cli({"validate", "--strict-exit", fixture()}).code, kExitFailure);
}

TEST(Cli, ValidateReportReplays) {
  const CliRun r = run_cli({"validate", fixture()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["compatibility"][2]["status"], "fails");
  EXPECT_EQ(j["validity"]["clusters"][1]["l_pre_witness"], Json::array({"x2", "x3"}));
  EXPECT_TRUE(replay_report(j, parse_config(slurp(fixture()))).empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check-axioms", "/nonexistent/config.json"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check-axioms", "--jobs", "0", fixture()}).code, kExitUsage);
  EXPECT_EQ(run_cli({"check-axioms", "--format", "xml", fixture()}).code, kExitUsage);
}

TEST_F(TempDir, ParseErrorExitAndMessage) {
  const std::string p = write("bad.json", R"({"universe": ["a"], "granulation": "predecessor"})");
  const CliRun r = run_cli({"check-axioms", p});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("/granulation"), std::string::npos);
}

TEST_F(TempDir, ValidateWithoutClusteringIsUsageError) {
  const std::string p = write("noclust.json", R"({"universe": ["a", "b"]})");
  EXPECT_EQ(run_cli({"validate", p}).code, kExitUsage);
}

TEST_F(TempDir, DeferredCoherenceWithoutDelta) {
  const std::string p = write("nodelta.json", R"({"universe": ["a", "b"], "relation": {"pairs": [["a","a"],["b","b"]]}})");
  const CliRun r = run_cli({"check-axioms", p});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["structures"].size(), 1U);
  EXPECT_EQ(j["structures"][0]["coherence"], "deferred: delta not bound");
  EXPECT_EQ(j["structures"][0]["classification"]["is_mss"], "deferred");
}

TEST_F(TempDir, SearchBudgetExit) {
  const std::string p = write("spec.json", R"({"n": 4, "family": "relations", "required": ["i-coh"]})");
  const CliRun r = run_cli({"search", p});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST_F(TempDir, SearchFindsWitness) {
  const std::string p = write("spec.json", R"({"n": 1, "family": "extensional-deltas", "required": ["i-coh"], "forbidden": ["n-coh"]})");
  const CliRun r = run_cli({"search", p});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["result"], "witness found");
}

TEST_F(TempDir, OutputFileAndTextFormat) {
  const std::string out = (dir_ / "report.txt").string();
  const CliRun r = run_cli({"check-axioms", "--format", "text", "-o", out, fixture()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string text = slurp(out);
  EXPECT_NE(text.find("command: check-axioms"), std::string::npos);
  EXPECT_FALSE(fs::exists(out + ".tmp"));
}

TEST(Cli, DeterministicAcrossRunsAndJobs) {
  const CliRun a = run_cli({"check-axioms", "--seed", "7", "--jobs", "1", fixture()});
  const CliRun b = run_cli({"check-axioms", "--seed", "7", "--jobs", "1", fixture()});
  const CliRun c = run_cli({"check-axioms", "--seed", "7", "--jobs", "4", fixture()});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out), Json::parse(c.out));
  EXPECT_EQ(Json::parse(a.out)["provenance"]["seed"], 7);
}

}  // namespace
}  // namespace msslab::cli
