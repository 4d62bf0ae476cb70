#include "xi_audit/cli/run.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace xi_audit;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "xi_audit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(XI_AUDIT_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, EvalXiAtOrigin) {
    const auto r = invoke({"eval-xi", "--t", "0", "--method", "both"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["command"], "eval-xi");
    EXPECT_EQ(j["wall_time_ms"], 0);
}

TEST(Cli, VerdictRejectsSmallRealPart) { EXPECT_EQ(invoke({"verdict", "--t1", "6", "--t2", "0.25"}).code, 2); }

TEST(Cli, VerdictOnRealAxisPasses) { EXPECT_EQ(invoke({"verdict", "--t1", "13", "--t2", "0"}).code, 0); }

TEST(Cli, VerdictOffAxisReportsFindings) {
    const auto r = invoke({"verdict", "--t1", "13", "--t2", "0.25"});
    EXPECT_EQ(r.code, 1);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["precision_mode"], "dec:50");
    EXPECT_EQ(j["trace"]["conclusion"], "inconclusive");
    EXPECT_EQ(j["trace"]["case_label"], "interior-zero-Q-nonpositive");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"eval-xi", "--t", "1", "--prec", "quad"}).code, 2);
    EXPECT_EQ(invoke({"eval-xi", "--t", "1", "--method", "neither"}).code, 2);
    EXPECT_EQ(invoke({"eval-xi", "--t", "1", "--config", data("missing.json")}).code, 2);
}

TEST(Cli, ConfigFileWithFlagOverride) {
    const auto base = invoke({"audit-identity", "--config", data("identity_config.json")});
    ASSERT_NE(base.code, 2) << base.err;
    const auto j = Json::parse(base.out);
    EXPECT_DOUBLE_EQ(j["params"]["eps"].get<double>(), 0.1);
    EXPECT_DOUBLE_EQ(j["params"]["t1"].get<double>(), 13);

    const auto over = invoke({"audit-identity", "--config", data("identity_config.json"), "--eps", "0.2"});
    const auto k = Json::parse(over.out);
    EXPECT_DOUBLE_EQ(k["params"]["eps"].get<double>(), 0.2);
    EXPECT_DOUBLE_EQ(k["params"]["b"].get<double>(), 1);
}

TEST(Cli, AuditIdentityFlagsPrintedForms) {
    const auto r = invoke({"audit-identity", "--t1", "13", "--t2", "0.25", "--b", "1", "--eps", "0.1"});
    EXPECT_EQ(r.code, 1);
    const auto j = Json::parse(r.out);
    int failures = 0;
    for (const auto& c : j["checks"]) {
        if (c["status"] == "fail") {
            ++failures;
            const auto name = c["name"].get<std::string>();
            EXPECT_TRUE(name == "printed F vs derived F" || name == "h with (b/2)^2 vs h with (b/2)^5") << name;
        }
    }
    EXPECT_EQ(failures, 2);
}

TEST(Cli, LoadZeroTables) {
    EXPECT_EQ(invoke({"load-zeros", "--file", data("first_zeros.txt")}).code, 0);
    const auto bad = invoke({"load-zeros", "--file", data("bad_line2.txt")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("2"), std::string::npos);
    EXPECT_EQ(invoke({"load-zeros", "--file", data("out_of_order.txt")}).code, 2);
    EXPECT_EQ(invoke({"load-zeros", "--file", data("missing.txt")}).code, 2);
}

TEST(Cli, OutWritesFile) {
    const auto dir = std::filesystem::temp_directory_path() / "xi_audit_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "signs.json").string();
    const auto r = invoke({"audit-signs", "--alpha", "13,52", "--out", path, "--svg"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(std::filesystem::exists(path));
    EXPECT_TRUE(std::filesystem::exists(dir / "signs.svg"));
    EXPECT_NE(r.out.find("pass  "), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Cli, SweepPrintsCsv) {
    const auto r = invoke({"sweep", "--from", "13", "--to", "40", "--count", "3", "--kind", "signs"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, 6), "index,");
}
