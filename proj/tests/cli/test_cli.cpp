#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace {

struct Output {
    int code = -1;
    std::string text;
};

// Runs the tool with stderr folded into stdout.
Output bench(const std::string &args) {
    const std::string cmd = std::string("\"") + ANYTIME_BENCH_PATH + "\" " + args + " 2>&1";
    Output out;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.text.append(buf.data(), n);
    const int status = pclose(pipe);
    out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string fixture(const std::string &name) { return std::string(ANYTIME_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        std::random_device rd;
        dir_ = std::filesystem::temp_directory_path() / ("anytime-cli-" + std::to_string(rd()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

} // namespace

TEST_F(CliTest, RunWritesTraceToStdout) {
    const Output o = bench("run --algorithm awastar --weight 2 --domain graph --instance " + fixture("diamond.graph") +
                           " --fstar oracle");
    EXPECT_EQ(o.code, 0) << o.text;
    EXPECT_EQ(o.text.rfind("# anytime-search trace v1", 0), 0u) << o.text;
    EXPECT_NE(o.text.find("wall_time_s,expansions,stored,incumbent_cost"), std::string::npos);
    EXPECT_NE(o.text.find("# summary status=converged cost=4"), std::string::npos) << o.text;
}

TEST_F(CliTest, RunWithOutPrintsStatusLine) {
    const Output o = bench("run --algorithm anytime_wrbfs --weight 3/2 --instance " + fixture("reversed.tiles") +
                           " --out " + path("t.csv"));
    EXPECT_EQ(o.code, 0) << o.text;
    EXPECT_NE(o.text.find("status=converged cost=28"), std::string::npos) << o.text;
    EXPECT_NE(slurp(path("t.csv")).find("algorithm=anytime_wrbfs"), std::string::npos);
}

TEST_F(CliTest, InterruptedRunExitsTwo) {
    const Output o = bench("run --algorithm awastar --weight 3/2 --instance " + fixture("reversed.tiles") +
                           " --max-expansions 5");
    EXPECT_EQ(o.code, 2) << o.text;
    EXPECT_NE(o.text.find("status=interrupted"), std::string::npos) << o.text;
}

TEST_F(CliTest, UnreachableGoalExitsThree) {
    const Output o = bench("run --algorithm astar --domain graph --instance " + fixture("unreachable.graph"));
    EXPECT_EQ(o.code, 3) << o.text;
}

TEST_F(CliTest, UsageErrorsExitFour) {
    EXPECT_EQ(bench("run --algorithm awastar --bogus 1 --instance " + fixture("goal.tiles")).code, 4);
    EXPECT_EQ(bench("run --algorithm astar --weight-step 1/10 --instance " + fixture("goal.tiles")).code, 4);
    EXPECT_EQ(bench("run --algorithm awastar").code, 4);
    EXPECT_EQ(bench("").code, 4);
    const Output missing = bench("run --algorithm awastar --instance " + path("nope.tiles"));
    EXPECT_EQ(missing.code, 4);
    EXPECT_NE(missing.text.find("error:"), std::string::npos) << missing.text;
    const Output bad = bench("run --algorithm awastar --domain graph --instance " + fixture("inadmissible.graph"));
    EXPECT_EQ(bad.code, 4) << bad.text;
}

TEST_F(CliTest, HelpExitsZero) {
    const Output o = bench("--help");
    EXPECT_EQ(o.code, 0);
    for (const char *sub : {"run", "profile", "gen", "lint"})
        EXPECT_NE(o.text.find(sub), std::string::npos) << sub;
}

TEST_F(CliTest, GenIsByteIdenticalPerSeed) {
    for (const char *domain : {"tiles", "graph", "msa"}) {
        const Output a = bench(std::string("gen --domain ") + domain + " --seed 42");
        const Output b = bench(std::string("gen --domain ") + domain + " --seed 42");
        const Output c = bench(std::string("gen --domain ") + domain + " --seed 43");
        EXPECT_EQ(a.code, 0) << a.text;
        EXPECT_EQ(a.text, b.text) << domain;
        EXPECT_NE(a.text, c.text) << domain;
    }
}

TEST_F(CliTest, GeneratedInstancesRunAndLintClean) {
    ASSERT_EQ(bench("gen --domain graph --seed 5 --out " + path("g.graph")).code, 0);
    const Output r = bench("run --algorithm awastar --weight 3/2 --domain graph --fstar oracle --instance " +
                           path("g.graph") + " --out " + path("g.csv"));
    EXPECT_EQ(r.code, 0) << r.text;
    ASSERT_EQ(bench("gen --domain tiles --width 4 --walk 25 --seed 5 --out " + path("b.tiles")).code, 0);
    const Output t = bench("run --algorithm awastar --weight 2 --fstar oracle --instance " + path("b.tiles") +
                           " --out " + path("b.csv"));
    EXPECT_EQ(t.code, 0) << t.text;
    const Output l = bench("lint " + path("b.csv"));
    EXPECT_EQ(l.code, 0) << l.text;
    EXPECT_NE(l.text.find("1 trace(s), 0 violation(s)"), std::string::npos) << l.text;
}

TEST_F(CliTest, LintReportsViolations) {
    const Output o = bench("lint " + fixture("bad_trace.csv"));
    EXPECT_EQ(o.code, 1) << o.text;
    EXPECT_NE(o.text.find("bad_trace.csv:5:"), std::string::npos) << o.text;
    EXPECT_NE(o.text.find("bad_trace.csv:6:"), std::string::npos) << o.text;
}

TEST_F(CliTest, ProfileWritesQualityAndSummary) {
    for (int seed = 1; seed <= 4; ++seed)
        ASSERT_EQ(bench("gen --domain tiles --seed " + std::to_string(seed) + " --out " +
                        path("b" + std::to_string(seed) + ".tiles"))
                      .code,
                  0);
    std::filesystem::create_directories(dir_ / "out");
    const Output o = bench("profile --instance-dir " + dir_.string() + " --series awastar:2 --series astar --jobs 2" +
                           " --out " + path("out/q.csv"));
    EXPECT_EQ(o.code, 0) << o.text;
    const std::string q = slurp(path("out/q.csv"));
    EXPECT_EQ(q.rfind("expansions,awastar@2,astar@1\n1,", 0), 0u) << q;
    const std::string s = slurp(path("out/q_summary.csv"));
    EXPECT_NE(s.find("awastar@2"), std::string::npos) << s;
}

TEST_F(CliTest, ProfileWarnsWithoutFstar) {
    const Output o = bench("profile --domain graph --instance " + fixture("diamond.graph") +
                           " --series awastar:2 --fstar " + path("missing.txt"));
    EXPECT_EQ(o.code, 4) << o.text;
    std::ofstream(path("fstar.txt")) << "other.graph 3\n";
    const Output w = bench("profile --domain graph --instance " + fixture("diamond.graph") +
                           " --series awastar:2 --fstar " + path("fstar.txt"));
    EXPECT_EQ(w.code, 0) << w.text;
    EXPECT_NE(w.text.find("warning"), std::string::npos) << w.text;
}

TEST_F(CliTest, MsaRunOnProteinFragments) {
    std::ofstream(path("pair.fasta")) << ">a\nMVLSPADKTNVKAAWGKVGA\n>b\nMVHLTPEEKSAVTALWGKVN\n";
    const Output o = bench("run --algorithm awastar --weight 100/99 --domain msa --fstar oracle --instance " +
                           path("pair.fasta") + " --out " + path("m.csv"));
    EXPECT_EQ(o.code, 0) << o.text;
    EXPECT_NE(o.text.find("status=converged"), std::string::npos) << o.text;
    const Output r = bench("run --algorithm anytime_wrbfs --domain msa --instance " + path("pair.fasta"));
    EXPECT_EQ(r.code, 4) << r.text;
}
