#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "dccm/cli.hpp"
#include "dccm/json_io.hpp"
#include "dccm/runs.hpp"

using namespace dccm;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "dccm_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool has_witness(const Json& report, const std::string& axiom, const std::string& x,
                 const std::string& z, const std::string& y) {
    for (const auto& r : report.at("reports")) {
        if (r.at("axiom") != axiom) continue;
        for (const auto& v : r.at("violations")) {
            if (v.at("x") == x && v.at("z") == z && v.at("y") == y) return true;
        }
    }
    return false;
}

}  // namespace

TEST(Verify, HalflineFindsCounterexample) {
    const auto r = run({"verify", "--space", "halfline", "--mode", "exhaustive"});
    EXPECT_EQ(r.code, kExitFinding);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j.at("verdict"), "fail");
    EXPECT_TRUE(has_witness(j, "CCM3", "0", "3", "0.5"));
}

TEST(Verify, CrossUnitPasses) {
    const auto r = run({"verify", "--space", "cross-unit", "--mode", "exhaustive"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(Json::parse(r.out).at("verdict"), "pass");
}

TEST(Verify, UsageErrors) {
    EXPECT_EQ(run({"verify", "--space", "nosuch"}).code, kExitUsage);
    EXPECT_EQ(run({"verify"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--space", "cross", "--mode", "sometimes"}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
}

TEST(Verify, RandomModeCarriesShrunkWitnesses) {
    const auto r = run({"verify", "--space", "halfline", "--mode", "random", "--seed", "3"});
    EXPECT_EQ(r.code, kExitFinding);
    const Json j = Json::parse(r.out);
    bool any = false;
    for (const auto& rep : j.at("reports")) any = any || rep.contains("shrunk_violations");
    EXPECT_TRUE(any);
}

TEST(Solve, GoldenRuns) {
    const auto h = run({"solve", "--space", "cross-unit", "--map", "halving", "--family",
                        "banach", "--x0", "H:1"});
    ASSERT_EQ(h.code, kExitOk) << h.err;
    const Json hj = Json::parse(h.out);
    const Point fp = Point::parse(PointKind::Cross, hj.at("solve").at("fixed_point").get<std::string>());
    EXPECT_LT(fp.t(), 1e-9);
    EXPECT_EQ(hj.at("verdict"), "pass");

    const auto k = run({"solve", "--space", "interval", "--map", "quartering", "--family", "kannan"});
    ASSERT_EQ(k.code, kExitOk) << k.err;
    const Json kj = Json::parse(k.out);
    EXPECT_NEAR(real_from_json(kj.at("contraction").at("params").at("a")), 1.0 / 3, 1.0 / 48);
    EXPECT_NEAR(real_from_json(kj.at("contraction").at("params").at("b")), 1.0 / 3, 1.0 / 48);
}

TEST(Solve, InfeasibleExitsThree) {
    const auto r = run({"solve", "--space", "cross-unit", "--map", "identity", "--family", "banach"});
    EXPECT_EQ(r.code, kExitInfeasible);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j.at("verdict"), "infeasible");
    EXPECT_FALSE(j.at("contraction").at("worst_pair").is_null());
    EXPECT_EQ(run({"solve", "--space", "cross", "--map", "halving", "--family", "kannan"}).code,
              kExitInfeasible);
}

TEST(Solve, UsageErrors) {
    EXPECT_EQ(run({"solve", "--space", "interval", "--map", "halving"}).code, kExitUsage);
    EXPECT_EQ(run({"solve", "--space", "cross", "--map", "halving", "--x0", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"solve", "--space", "cross"}).code, kExitUsage);
}

TEST(Hypotheses, FromSolveReport) {
    const fs::path solve_out = scratch("solve_h.json");
    ASSERT_EQ(run({"solve", "--space", "cross-unit", "--map", "halving", "-o", solve_out.string()})
                  .code,
              kExitOk);
    const auto r = run({"hypotheses", "--orbit", solve_out.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(real_from_json(j.at("hypothesis").at("q_estimate")), 1.0);
    EXPECT_EQ(j.at("verdict"), "pass");

    const auto reich = run({"hypotheses", "--orbit", solve_out.string(), "--family", "reich",
                            "--c", "0.5"});
    EXPECT_EQ(reich.code, kExitOk) << reich.err;
    EXPECT_EQ(run({"hypotheses", "--orbit", scratch("missing.json").string()}).code, kExitUsage);
}

TEST(Report, MergesDedupesAndRejects) {
    const fs::path a = scratch("golden_a.json"), b = scratch("golden_b.json");
    ASSERT_EQ(run({"solve", "--space", "cross-unit", "--map", "halving", "-o", a.string()}).code, 0);
    ASSERT_EQ(run({"solve", "--space", "interval", "--map", "quartering", "--family", "kannan",
                   "-o", b.string()})
                  .code,
              0);
    const auto two = run({"report", a.string(), b.string()});
    ASSERT_EQ(two.code, kExitOk) << two.err;
    std::istringstream lines(two.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "command,space,map,family,params,q_estimate,q_threshold,residual,verdict");

    const auto dup = run({"report", a.string(), b.string(), a.string()});
    EXPECT_EQ(dup.out, two.out);
    const auto swapped = run({"report", b.string(), a.string()});
    EXPECT_EQ(swapped.out, two.out);

    EXPECT_EQ(run({"report"}).code, kExitUsage);
    const fs::path junk = scratch("junk.json");
    std::ofstream(junk) << "{\"hello\": 1}";
    EXPECT_EQ(run({"report", junk.string()}).code, kExitUsage);
    std::ofstream(junk) << "not json";
    EXPECT_EQ(run({"report", junk.string()}).code, kExitUsage);
}

TEST(Determinism, ByteIdenticalReports) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "--space", "halfline", "--mode", "random", "--seed", "9"},
             {"verify", "--space", "cross", "--mode", "exhaustive"},
             {"solve", "--space", "interval", "--map", "quartering", "--family", "reich"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
    const auto a = run({"verify", "--space", "interval", "--mode", "random", "--seed", "1"});
    const auto b = run({"verify", "--space", "interval", "--mode", "random", "--seed", "2"});
    EXPECT_NE(a.out, b.out);
}

TEST(Binary, ExitCodesThroughProcess) {
    const char* cli = std::getenv("DCCM_CLI");
    if (!cli) GTEST_SKIP() << "DCCM_CLI not set";
    auto status = [&](const std::string& args) {
        const int raw = std::system((std::string(cli) + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("verify --space halfline"), 2);
    EXPECT_EQ(status("verify --space cross-unit"), 0);
    EXPECT_EQ(status("verify --space nosuch"), 1);
    EXPECT_EQ(status("solve --space cross-unit --map identity"), 3);

    const fs::path f1 = scratch("bin1.json"), f2 = scratch("bin2.json");
    status("verify --space halfline --mode random --seed 4 -o " + f1.string());
    status("verify --space halfline --mode random --seed 4 -o " + f2.string());
    EXPECT_EQ(slurp(f1), slurp(f2));
    EXPECT_FALSE(slurp(f1).empty());
}
