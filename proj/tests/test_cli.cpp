#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "setsys/cli.hpp"
#include "setsys/family.hpp"
#include "setsys/report.hpp"

using namespace setsys;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("setsys_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, BoundThm17) {
  const auto r = run({"bound", "--theorem", "thm17", "--n", "7", "--l1", "1", "--s", "1", "--r", "1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "bound = 6, threshold n ≥ 7: PASS\n");
}

TEST_F(Cli, BoundBelowThresholdFails) {
  const auto r = run({"bound", "--theorem", "thm17", "--n", "6", "--l1", "1", "--s", "1", "--r", "1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "bound = 5, threshold n ≥ 7: FAIL\n");
}

TEST_F(Cli, BoundRationalAndMissingFlag) {
  const auto fs9 = run({"bound", "--theorem", "FS_1_9", "--n", "5", "--s", "2", "--wise", "3"});
  EXPECT_EQ(fs9.code, cli::kOk);
  EXPECT_EQ(fs9.out, "bound = 58/3, n ≥ n0: UNKNOWN\n");
  EXPECT_EQ(run({"bound", "--theorem", "thm17", "--n", "7"}).code, cli::kUsage);
  EXPECT_EQ(run({"bound", "--theorem", "nonsense", "--n", "7"}).code, cli::kUsage);
}

TEST_F(Cli, BoundQAnalogue) {
  const auto r = run({"bound", "--theorem", "T1_15", "--q", "2", "--n", "7", "--l1", "1", "--s", "1", "--k", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "bound = 64, threshold q^(n-l1) ≥ 36: PASS\n");
}

TEST_F(Cli, CheckSnevilyStarIsTight) {
  const auto fam = write("star.fam", "n=4\n{1}\n{1,2}\n{1,3}\n{1,4}\n");
  const auto out = path("r.json");
  const auto r = run({"check", "--family", fam, "--L", "1", "--theorem", "snevily", "--out", out});
  EXPECT_EQ(r.code, cli::kOk);
  const auto doc = Json::parse(slurp(out));
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["invocation"]["command"], "check");
  ASSERT_EQ(doc["results"].size(), 1u);
  EXPECT_EQ(doc["results"][0]["theorem"], "SNEVILY_1_5");
  EXPECT_EQ(doc["results"][0]["tight"], true);
  EXPECT_TRUE(doc["anomalies"].empty());
}

TEST_F(Cli, SearchFranklWilson) {
  const auto r = run({"search", "--n", "4", "--L", "0", "--wise", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "max = 5 (certified)");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"search", "--n", "4", "--L", "1,0"}).code, cli::kUsage);
  EXPECT_EQ(run({"search", "--n", "4", "--L", "1,1"}).code, cli::kUsage);
  EXPECT_EQ(run({"search", "--n", "4", "--L", "0", "--bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"search", "--n", "4", "--L", "0", "--wise", "1"}).code, cli::kUsage);
}

TEST_F(Cli, DataErrors) {
  const auto bad = write("bad.fam", "n=2\n{1,5}\n");
  EXPECT_EQ(run({"check", "--family", bad, "--L", "1"}).code, cli::kData);
  EXPECT_EQ(run({"check", "--family", path("missing.fam"), "--L", "1"}).code, cli::kData);
  const auto nonpart = write("p.fam", "n=4\n{1,2}\n{1,3}\n{1,4}\n");
  EXPECT_EQ(run({"partition", "--family", nonpart, "--L", "1"}).code, cli::kData);
}

TEST_F(Cli, ValidFamilyHasNoAnomaly) {
  const auto fam = write("s.fam", "n=7\n{1,2}\n{1,3}\n{1,4}\n{1,5}\n{1,6}\n{1,7}\n");
  const auto r = run({"check", "--family", fam, "--L", "1", "--K", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.err, "");
}

TEST_F(Cli, FalseN0AssertionRaisesAnomaly) {
  const auto fam = write("two.fam", "n=2\n{1,2}\n{1}\n");
  const std::vector<std::string> base = {"check", "--family", fam, "--L", "2", "--wise", "3", "--theorem", "FS_1_10"};
  const auto plain = run(base);
  EXPECT_EQ(plain.code, cli::kOk);
  auto asserted = base;
  asserted.insert(asserted.end(), {"--assert-n0", "--out", path("a.json")});
  const auto r = run(asserted);
  EXPECT_EQ(r.code, cli::kAnomaly);
  EXPECT_NE(r.err.find("ANOMALY"), std::string::npos);
  const auto doc = Json::parse(slurp(path("a.json")));
  EXPECT_EQ(doc["anomalies"].size(), 1u);

  const auto scan = run({"scan", "--n", "2", "--L", "1,2", "--wise", "4", "--theorem", "FS_1_10", "--assert-n0"});
  EXPECT_EQ(scan.code, cli::kAnomaly);
  EXPECT_EQ(run({"scan", "--n", "2", "--L", "1,2", "--wise", "4", "--theorem", "FS_1_10"}).code, cli::kOk);
}

TEST_F(Cli, BudgetExhaustionExitsFour) {
  const auto r = run({"search", "--n", "7", "--L", "0,1", "--wise", "5", "--budget", "0.2"});
  EXPECT_EQ(r.code, cli::kBudget);
  EXPECT_NE(r.out.find("uncertified"), std::string::npos);
}

TEST_F(Cli, ConstructRoundTrip) {
  const auto out = path("c.fam");
  const auto r = run({"construct", "--n", "8", "--l1", "1", "--s", "2", "--r", "2", "--out", out});
  EXPECT_EQ(r.code, cli::kOk);
  const auto text = slurp(out);
  const auto fam = parse_family_string(text);
  EXPECT_EQ(serialize_family(fam), text);
  EXPECT_EQ(fam.size(), 28u);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> cmds = {
      {"search", "--n", "5", "--L", "1", "--K", "2"},
      {"scan", "--n", "4", "--L", "0,1"},
      {"qsearch", "--q", "2", "--n", "4", "--dims", "2", "--L", "1"},
  };
  for (const auto& c : cmds) {
    auto a = c, b = c;
    a.insert(a.end(), {"--out", path("a.json")});
    b.insert(b.end(), {"--out", path("b.json")});
    const auto ra = run(a), rb = run(b);
    EXPECT_EQ(ra.code, cli::kOk);
    EXPECT_EQ(ra.out, rb.out);
    auto ja = Json::parse(slurp(path("a.json")));
    auto jb = Json::parse(slurp(path("b.json")));
    ja.erase("invocation");
    jb.erase("invocation");
    EXPECT_EQ(ja.dump(), jb.dump());
  }
}

TEST_F(Cli, WitnessAndQenum) {
  const auto fam = write("t.fam", "n=3\n{1,2}\n{2,3}\n{1,3}\n");
  const auto w = run({"witness", "--family", fam});
  EXPECT_EQ(w.code, cli::kOk);
  EXPECT_NE(w.out.find("witness (3 of 3 members"), std::string::npos);
  const auto q = run({"qenum", "--q", "2", "--n", "4", "--dims", "2", "--out", path("q.sub")});
  EXPECT_EQ(q.code, cli::kOk);
  EXPECT_EQ(q.out.substr(0, q.out.find('\n')), "dim 2: 35 subspaces (Gaussian binomial 35)");
  const auto qw = run({"witness", "--family", path("q.sub")});
  EXPECT_EQ(qw.code, cli::kOk);
}

TEST_F(Cli, ScanGridFile) {
  const auto grid = write("g.grid", "n=4 L=0\nn=4 L=1\n");
  const auto r = run({"scan", "--grid", grid, "--out", path("s.json")});
  EXPECT_EQ(r.code, cli::kOk);
  const auto doc = Json::parse(slurp(path("s.json")));
  EXPECT_EQ(doc["results"].size(), 2u);
  const auto bad = write("bad.grid", "n=4 L=0\nn= L=1\n");
  EXPECT_EQ(run({"scan", "--grid", bad}).code, cli::kData);
}
