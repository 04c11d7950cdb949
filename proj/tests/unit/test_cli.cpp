#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chtwist/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "chtwist");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = chtwist::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyOneDimensional) {
    const Result r = run({"verify", "--n", "1", "--c", "1", "--samples", "50"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("command"), "verify");
    EXPECT_EQ(j.at("schema_version"), 1);
    EXPECT_TRUE(j.at("all_pass").get<bool>());
    EXPECT_EQ(j.at("config").at("seed"), 20240917u);
    for (const auto& check : j.at("checks")) {
        for (const char* key : {"check_id", "samples", "max_residual", "tolerance", "pass"}) {
            EXPECT_TRUE(check.contains(key)) << key;
        }
    }
}

TEST(Cli, VerifyReportsCriticalLevelDegeneracy) {
    const Result r = run({"verify", "--n", "2", "--c", "0.5", "--samples", "30"});
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j.at("all_pass").get<bool>());
    for (const auto& check : j.at("checks")) {
        EXPECT_EQ(check.at("pass").get<bool>(), check.at("check_id") != "symplectic_critical_level")
            << check.at("check_id");
    }
}

TEST(Cli, VerifyCsv) {
    const Result r = run({"verify", "--samples", "10", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("check_id,samples,max_residual,tolerance,pass\n", 0), 0u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"verify", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"verify", "--c", "-1"}).code, 2);
    EXPECT_EQ(run({"verify", "--samples", "0"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"flow", "--dt", "0"}).code, 2);
    EXPECT_EQ(run({"flow", "--mode", "sideways"}).code, 2);
    EXPECT_EQ(run({"contact-scan", "--a", "0.5"}).code, 2);
    EXPECT_EQ(run({"verify", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FlowCsv) {
    const Result r = run({"flow", "--n", "1", "--c", "1", "--energy", "0.25", "--T", "1", "--dt", "0.01"});
    EXPECT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("# chtwist flow", 0), 0u);
    std::getline(in, line);
    EXPECT_EQ(line, "t,x0,x1,v0,v1,energy,drift");
    int rows = 0;
    std::string last;
    while (std::getline(in, line)) {
        if (line.rfind('#', 0) == 0) {
            last = line;
            continue;
        }
        ++rows;
    }
    EXPECT_EQ(rows, 101);
    EXPECT_NE(last.find("truncated=false"), std::string::npos);
}

TEST(Cli, FlowEscapingOrbitIsTruncated) {
    const Result r = run({"flow", "--energy", "4", "--T", "50", "--stride", "1000", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("trajectory").at("truncated").get<bool>());
    EXPECT_EQ(j.at("trajectory").at("integrator"), "rk4");
}

TEST(Cli, ContactScanSinglePair) {
    const Result r = run({"contact-scan", "--a", "0.5", "--b", "2", "--samples", "10"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.at("reports").size(), 1u);
    EXPECT_EQ(j.at("reports")[0].at("verdict"), "contact_disconnected");
    EXPECT_EQ(j.at("reports")[0].at("boundary_components"), 2);
}

TEST(Cli, ContactScanGrid) {
    const Result r = run({"contact-scan", "--samples", "3", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    int rows = -1;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 49);
}

TEST(Cli, CurvatureCheck) {
    const Result ok = run({"curvature-check", "--n", "2", "--c", "3"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(ok.out).at("pass").get<bool>());

    const Result coarse = run({"curvature-check", "--fd-step", "0.3"});
    EXPECT_EQ(coarse.code, 1);
    EXPECT_GT(nlohmann::json::parse(coarse.out).at("max_relative_deviation").get<double>(), 1e-3);
}

TEST(Cli, WritesOutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "chtwist_cli_test.json";
    const Result r = run({"curvature-check", "--samples", "5", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j.at("samples"), 5);
    std::filesystem::remove(path);
}
