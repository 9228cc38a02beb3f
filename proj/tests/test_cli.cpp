#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "satgraph/cli.hpp"
#include "satgraph/serialization.hpp"

namespace satgraph {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("satgraph_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                  ->current_test_info()
                                                  ->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(CliTest, BuildOrderOneTower) {
    const auto r = run_cli({"build", "--n", "1", "--depth", "3", "--seed", "5", "--out", path("t.json")});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    const auto t = load_tower(path("t.json"));
    EXPECT_EQ(t.depth(), 3U);
    EXPECT_EQ(t.level(3).vertex_count(), 8U);
}

TEST_F(CliTest, BuildVerifyRoundTrip) {
    ASSERT_EQ(run_cli({"build", "--n", "2", "--depth", "2", "--seed", "11", "--out", path("a.json")}).code, 0);
    ASSERT_EQ(run_cli({"build", "--n", "2", "--depth", "2", "--seed", "11", "--out", path("b.json")}).code, 0);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    const auto v = run_cli({"verify", "--in", path("a.json")});
    EXPECT_EQ(v.code, cli::kSuccess);
    EXPECT_EQ(v.out, "ok: depth 2, all invariants hold\n");
}

TEST_F(CliTest, ExtendMatchesDirectBuild) {
    ASSERT_EQ(run_cli({"build", "--n", "2", "--depth", "1", "--seed", "3", "--out", path("one.json")}).code, 0);
    ASSERT_EQ(run_cli({"extend", "--in", path("one.json"), "--out", path("two.json")}).code, 0);
    ASSERT_EQ(run_cli({"build", "--n", "2", "--depth", "2", "--seed", "3", "--out", path("direct.json")}).code, 0);
    EXPECT_EQ(slurp(path("two.json")), slurp(path("direct.json")));
}

TEST_F(CliTest, MutatedTowerFailsVerification) {
    ASSERT_EQ(run_cli({"build", "--n", "2", "--depth", "1", "--seed", "1", "--out", path("t.json")}).code, 0);
    auto j = Json::parse(slurp(path("t.json")));
    auto& edges = j["levels"][1]["edges"];
    edges.erase(edges.begin());
    spit(path("bad.json"), j.dump() + "\n");
    const auto r = run_cli({"verify", "--in", path("bad.json")});
    EXPECT_EQ(r.code, cli::kVerificationFailed);
    EXPECT_EQ(r.out.rfind("FAILED ", 0), 0U) << r.out;
    EXPECT_NE(r.out.find("at level 1"), std::string::npos) << r.out;
}

TEST_F(CliTest, TruncatedFileIsMalformed) {
    ASSERT_EQ(run_cli({"build", "--n", "2", "--depth", "1", "--out", path("t.json")}).code, 0);
    const auto text = slurp(path("t.json"));
    spit(path("cut.json"), text.substr(0, text.size() / 2));
    EXPECT_EQ(run_cli({"verify", "--in", path("cut.json")}).code, cli::kMalformedInput);
    EXPECT_EQ(run_cli({"verify", "--in", path("missing.json")}).code, cli::kMalformedInput);
}

TEST_F(CliTest, BuildExhaustion) {
    const auto r = run_cli({"build", "--n", "4", "--depth", "1", "--mode", "empirical", "--m", "1",
                            "--max-attempts", "3", "--out", path("t.json")});
    EXPECT_EQ(r.code, cli::kBuildExhausted);
    EXPECT_FALSE(fs::exists(path("t.json")));
}

TEST_F(CliTest, RealizeTypes) {
    ASSERT_EQ(run_cli({"build", "--n", "3", "--depth", "1", "--seed", "2", "--out", path("t.json")}).code, 0);

    spit(path("empty.json"), "{\"constraints\":[]}");
    const auto e = run_cli({"realize", "--in", path("t.json"), "--type", path("empty.json"), "--check"});
    ASSERT_EQ(e.code, 0) << e.err;
    EXPECT_NE(e.out.find("separation_level=0\n"), std::string::npos);
    EXPECT_NE(e.out.find("entries=0,0\n"), std::string::npos);

    spit(path("two.json"),
         "{\"constraints\":[{\"entries\":[0],\"bit\":1},"
         "{\"canonical\":{\"level\":1,\"vertex\":45},\"bit\":0}]}");
    const auto r = run_cli({"realize", "--in", path("t.json"), "--type", path("two.json"), "--check"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("check=passed\n"), std::string::npos) << r.out;

    spit(path("three.json"),
         "{\"constraints\":[{\"entries\":[0],\"bit\":1},{\"entries\":[1],\"bit\":1},"
         "{\"entries\":[2],\"bit\":1}]}");
    EXPECT_EQ(run_cli({"realize", "--in", path("t.json"), "--type", path("three.json")}).code,
              cli::kTooManyConstraints);

    spit(path("same.json"),
         "{\"constraints\":[{\"entries\":[1],\"bit\":1},{\"entries\":[1],\"bit\":0}]}");
    EXPECT_EQ(run_cli({"realize", "--in", path("t.json"), "--type", path("same.json")}).code,
              cli::kNotSeparated);

    spit(path("junk.json"), "{\"constraints\":[{\"bit\":7}]}");
    EXPECT_EQ(run_cli({"realize", "--in", path("t.json"), "--type", path("junk.json")}).code,
              cli::kMalformedInput);
}

TEST_F(CliTest, RealizeAutoExtends) {
    ASSERT_EQ(run_cli({"build", "--n", "2", "--depth", "0", "--seed", "2", "--out", path("t.json")}).code, 0);
    spit(path("neg.json"), "{\"constraints\":[{\"entries\":[0],\"bit\":0}]}");
    const auto r = run_cli({"realize", "--in", path("t.json"), "--type", path("neg.json"), "--check"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("separation_level=1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("check=passed\n"), std::string::npos);
}

TEST_F(CliTest, StatsForOrderOne) {
    const auto r = run_cli({"stats", "--n", "1", "--m-from", "1", "--m-to", "2", "--trials", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "m,trials,saturated_rate,joint_rate,bound_a,bound_a_decimal,bound_b,bound_b_decimal,"
              "combined_decimal\n"
              "1,10,1.000000,1.000000,0/1,0.000000000000,0/1,0.000000000000,0.000000000000\n"
              "2,10,1.000000,1.000000,0/1,0.000000000000,0/1,0.000000000000,0.000000000000\n");
}

TEST_F(CliTest, StatsReportsExactBounds) {
    const auto r = run_cli({"stats", "--n", "2", "--m-from", "6", "--trials", "20", "--seed", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find(",7/16,0.437500000000,7/16,0.437500000000,0.875000000000\n"),
              std::string::npos)
        << r.out;
}

TEST_F(CliTest, ExportDot) {
    ASSERT_EQ(run_cli({"build", "--n", "3", "--out", path("t.json")}).code, 0);
    const auto r = run_cli({"export", "--in", path("t.json"), "--level", "0", "--format", "dot"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("graph level_0 {\n", 0), 0U);
    ASSERT_EQ(run_cli({"export", "--in", path("t.json"), "--out", path("g.dot")}).code, 0);
    EXPECT_EQ(slurp(path("g.dot")), r.out);
    EXPECT_EQ(run_cli({"export", "--in", path("t.json"), "--level", "1"}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({"export", "--in", path("t.json"), "--format", "svg"}).code,
              cli::kUsageError);
}

TEST(Cli, UsageErrors) {
    std::ostringstream out, err;
    EXPECT_EQ(cli::run({}, out, err), cli::kUsageError);
    EXPECT_EQ(cli::run({"frobnicate"}, out, err), cli::kUsageError);
    EXPECT_EQ(cli::run({"build", "--n", "2"}, out, err), cli::kUsageError);
    EXPECT_EQ(cli::run({"build", "--n", "x", "--out", "/dev/null"}, out, err), cli::kUsageError);
    EXPECT_EQ(cli::run({"build", "--n", "0", "--out", "/dev/null"}, out, err), cli::kUsageError);
    EXPECT_EQ(cli::run({"stats", "--n", "3", "--k", "2"}, out, err), cli::kUsageError);
}

}  // namespace
}  // namespace satgraph
