#include "stancewalk/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace stancewalk;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "stancewalk");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

class CliTest : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        const char* env = std::getenv("STANCEWALK_TMP");
        root_ = env ? fs::path(env) : fs::temp_directory_path() / "stancewalk_cli_test";
        fs::remove_all(root_);
        fs::create_directories(root_);
        const auto r = run({"synth", "--preset", "reference", "--users-per-class", "80", "--out",
                            (root_ / "corpus").string()});
        ASSERT_EQ(r.code, 0) << r.err;
    }

    static fs::path path(const std::string& name) { return root_ / name; }
    static std::string posts() { return (root_ / "corpus" / "posts.jsonl").string(); }
    static std::string golden() { return (root_ / "corpus" / "golden.csv").string(); }

    static inline fs::path root_;
};

} // namespace

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"classify", "--bogus"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"classify", "--input", posts(), "--seeds", "stance1,stance2", "--out", path("x").string(),
                   "--dampening", "sideways"})
                  .code,
              cli::kExitUsage);
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, cli::kExitOk);
    EXPECT_NE(help.out.find("classify"), std::string::npos);
}

TEST_F(CliTest, ClassifyWritesTablesAndManifest) {
    const auto dir = path("classify");
    const auto r = run({"classify", "--input", posts(), "--seeds", "stance1,stance2", "--classes", "one,two",
                        "--out", dir.string(), "--dump-graph", "--dump-similarities"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    for (const auto* f : {"hashtags.csv", "users.csv", "manifest.json", "graph.csv", "similarities.csv"})
        EXPECT_TRUE(fs::exists(dir / f)) << f;
    EXPECT_EQ(slurp(dir / "hashtags.csv").rfind("hashtag,class,intensity,tie\n", 0), 0u);
    const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(manifest["command"], "classify");
    EXPECT_EQ(manifest["config"]["seeds"], nlohmann::json({"stance1", "stance2"}));
    EXPECT_EQ(manifest["inputs"][0]["sha256"].get<std::string>().size(), 64u);
}

TEST_F(CliTest, MissingSeedIsADomainError) {
    const auto r = run({"classify", "--input", posts(), "--seeds", "stance1,nosuchtag", "--out",
                        path("missing").string()});
    EXPECT_EQ(r.code, cli::kExitDomain);
    EXPECT_NE(r.err.find("nosuchtag"), std::string::npos);
}

TEST_F(CliTest, MissingInputIsAnIoError) {
    const auto r = run({"classify", "--input", path("absent.jsonl").string(), "--seeds", "a,b", "--out",
                        path("absent").string()});
    EXPECT_EQ(r.code, cli::kExitIo);
}

TEST_F(CliTest, CooccurrenceMethodsNeedPosts) {
    spit(path("triples.csv"), "user,hashtag,count\nu1,a,2\nu1,b,1\nu2,b,3\nu2,a,1\n");
    const auto r = run({"classify", "--input", path("triples.csv").string(), "--seeds", "a,b", "--method", "srm",
                        "--out", path("srm_triples").string()});
    EXPECT_EQ(r.code, cli::kExitDomain);
    EXPECT_NE(r.err.find("post"), std::string::npos);
    const auto lrm = run({"classify", "--input", path("triples.csv").string(), "--seeds", "a,b", "--out",
                          path("lrm_triples").string()});
    EXPECT_EQ(lrm.code, cli::kExitOk) << lrm.err;
}

TEST_F(CliTest, EvalFromAssignments) {
    const auto dir = path("for_eval");
    ASSERT_EQ(run({"classify", "--input", posts(), "--seeds", "stance1,stance2", "--classes", "class1,class2",
                   "--out", dir.string()})
                  .code,
              0);
    const auto r = run({"eval", "--assignments", dir.string(), "--golden", golden()});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("user macro-F1 = "), std::string::npos);
}

TEST_F(CliTest, EvalCompareWritesOneBlockPerMethod) {
    const auto out = path("compare.csv");
    const auto r = run({"eval", "--input", posts(), "--seeds", "stance1,stance2", "--classes", "class1,class2",
                        "--golden", golden(), "--compare", "lrm,srm,rdm", "--out", out.string()});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto table = slurp(out);
    for (const auto* m : {"lrm,user,macro", "srm,user,macro", "rdm,user,macro"})
        EXPECT_NE(table.find(m), std::string::npos) << m;
    EXPECT_TRUE(fs::exists(path("compare.csv.manifest.json")));
}

TEST_F(CliTest, PerfectGoldenPrintsOne) {
    spit(path("perfect.csv"), "class,entity_kind,entity_id\nclass1,user,c1_u0000\nclass2,user,c2_u0000\n");
    const auto r = run({"eval", "--input", posts(), "--seeds", "stance1,stance2", "--classes", "class1,class2",
                        "--golden", path("perfect.csv").string()});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("user macro-F1 = 1.0000"), std::string::npos) << r.out;
}

TEST_F(CliTest, UnknownGoldenIdsAreWarnedAndDropped) {
    spit(path("unknown.csv"),
         "class,entity_kind,entity_id\nclass1,user,c1_u0000\nclass2,user,c2_u0000\nclass2,user,ghost\n");
    const auto r = run({"eval", "--input", posts(), "--seeds", "stance1,stance2", "--classes", "class1,class2",
                        "--golden", path("unknown.csv").string()});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.err.find("ghost"), std::string::npos);
}

TEST_F(CliTest, MalformedGoldenIsADomainError) {
    spit(path("bad_golden.csv"), "class,entity_kind,entity_id\nclass1,user\n");
    const auto r = run({"eval", "--input", posts(), "--seeds", "stance1,stance2", "--classes", "class1,class2",
                        "--golden", path("bad_golden.csv").string()});
    EXPECT_EQ(r.code, cli::kExitDomain);
}

TEST_F(CliTest, EvolveByWeek) {
    const auto r = run({"evolve", "--input", posts(), "--seeds", "stance1,stance2", "--window-days", "7",
                        "--origin", "2019-11-16"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("window,class,user_pct,hashtag_pct\n0,stance1,", 0), 0u) << r.out;
    EXPECT_EQ(run({"evolve", "--input", posts(), "--seeds", "stance1,stance2", "--origin", "yesterday"}).code,
              cli::kExitDomain);
    EXPECT_EQ(run({"evolve", "--input", path("triples.csv").string(), "--seeds", "a,b"}).code, cli::kExitDomain);
}

TEST_F(CliTest, BenchTable) {
    const auto r = run({"bench", "--input", posts(), "--seeds", "stance1,stance2", "--methods", "lrm,rdm",
                        "--repeat", "2"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("method,repeat,mean_seconds\nlrm,2,", 0), 0u) << r.out;
}

TEST_F(CliTest, RepeatedRunsAndThreadCountsAreByteIdentical) {
    const std::vector<std::string> base{"classify", "--input", posts(), "--seeds", "stance1,stance2"};
    auto with = [&](const std::string& dir, const std::string& threads) {
        auto args = base;
        args.insert(args.end(), {"--out", path(dir).string(), "--threads", threads, "--dump-similarities"});
        return run(args).code;
    };
    ASSERT_EQ(with("det_a", "1"), 0);
    ASSERT_EQ(with("det_b", "1"), 0);
    ASSERT_EQ(with("det_c", "8"), 0);
    for (const auto* f : {"hashtags.csv", "users.csv", "similarities.csv"}) {
        EXPECT_EQ(slurp(path("det_a") / f), slurp(path("det_b") / f)) << f;
        EXPECT_EQ(slurp(path("det_a") / f), slurp(path("det_c") / f)) << f;
    }
    EXPECT_EQ(slurp(path("det_a") / "manifest.json"), slurp(path("det_b") / "manifest.json"));
}

TEST_F(CliTest, ConfigFileSuppliesValuesAndFlagsWin) {
    spit(path("run.ini"), "[classify]\nrho = 3\nnear-tie = 0.1\n");
    const auto dir = path("config");
    ASSERT_EQ(run({"--config", path("run.ini").string(), "classify", "--input", posts(), "--seeds",
                   "stance1,stance2", "--out", dir.string(), "--rho", "5"})
                  .code,
              0);
    const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(manifest["config"]["rho"], 5);
    EXPECT_EQ(manifest["config"]["near_tie"], 0.1);
}

TEST_F(CliTest, SynthWritesCorpusAndManifest) {
    for (const auto* f : {"posts.jsonl", "golden.csv", "seeds.csv", "manifest.json"})
        EXPECT_TRUE(fs::exists(path("corpus") / f)) << f;
    const auto manifest = nlohmann::json::parse(slurp(path("corpus") / "manifest.json"));
    EXPECT_EQ(manifest["config"]["users_per_class"], 80);
}
