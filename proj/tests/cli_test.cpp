#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "argcount/cli.hpp"

using namespace argcount;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "argcount");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ARGCOUNT_DATA_DIR) + "/" + name; }

} // namespace

TEST(Cli, SolvePlain) {
    const auto r = run_cli({"solve", "--input", data("four_args.apx"), "--alpha", "0.98", "--epsilon", "1e-3"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string name;
    double value;
    const std::vector<std::pair<std::string, double>> expected = {
        {"x1", 0.89}, {"x2", 0.22}, {"x3", 0.60}, {"x4", 1.00}};
    for (const auto& [n, v] : expected) {
        ASSERT_TRUE(lines >> name >> value);
        EXPECT_EQ(name, n);
        EXPECT_NEAR(value, v, 0.005);
    }
}

TEST(Cli, SolveTgfJsonAndCsv) {
    auto r = run_cli({"solve", "--input", data("four_args.tgf"), "--output", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["iterations"], 32);
    EXPECT_EQ(j["strengths"].size(), 4u);

    r = run_cli({"solve", "--input", data("four_args.apx"), "--output", "csv"});
    EXPECT_EQ(r.out.rfind("argument,strength\nx1,0.894", 0), 0u);

    r = run_cli({"solve", "--input", data("four_args.apx"), "--output", "dot"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, SolveWritesTrace) {
    const auto path = (std::filesystem::temp_directory_path() / "argcount_cli_trace.csv").string();
    const auto r = run_cli({"solve", "--input", data("three_cycle.apx"), "--trace", path});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "k,delta,a,b,c");
    std::remove(path.c_str());
}

TEST(Cli, InputErrors) {
    auto r = run_cli({"solve", "--input", data("missing.apx")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("missing.apx"), std::string::npos);

    r = run_cli({"solve", "--input", data("malformed.apx")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("malformed.apx:3:1: error:"), std::string::npos);

    r = run_cli({"solve", "--input", data("four_args.apx"), "--alpha", "1.5"});
    EXPECT_EQ(r.code, 1);

    r = run_cli({"solve"});
    EXPECT_EQ(r.code, 1);

    r = run_cli({"frobnicate"});
    EXPECT_EQ(r.code, 1);

    r = run_cli({"walks", "--input", data("four_args.apx"), "--from", "x9", "--to", "x1", "--length", "2"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, NonConvergenceExitCode) {
    const auto r = run_cli({"solve", "--input", data("four_args.apx"), "--max-iter", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("x1 0.51"), std::string::npos);
}

TEST(Cli, Rank) {
    auto r = run_cli({"rank", "--input", data("four_args.apx")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x4 > x1 > x3 > x2\n");
    r = run_cli({"rank", "--input", data("three_cycle.apx"), "--output", "json"});
    EXPECT_EQ(r.out, "[[\"a\",\"b\",\"c\"]]\n");
}

TEST(Cli, Extensions) {
    auto r = run_cli({"extensions", "--input", data("four_args.apx"), "--semantics", "admissible"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{} {x1,x4} {x4}\n");
    r = run_cli({"extensions", "--input", data("four_args.apx"), "--semantics", "stable"});
    EXPECT_EQ(r.out, "none\n");
    r = run_cli({"extensions", "--input", data("four_args.apx"), "--semantics", "grounded", "--output", "json"});
    EXPECT_EQ(r.out, "[[\"x1\",\"x4\"]]\n");
    r = run_cli({"extensions", "--input", data("four_args.apx"), "--semantics", "ideal"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, Walks) {
    auto r = run_cli({"walks", "--input", data("four_args.apx"), "--from", "x3", "--to", "x2", "--length", "100"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "354224848179261915075\n");
    r = run_cli({"walks", "--input", data("four_args.apx"), "--from", "x3", "--to", "x1", "--length", "4",
                 "--output", "json"});
    EXPECT_EQ(r.out, "{\"from\":\"x3\",\"to\":\"x1\",\"length\":4,\"count\":\"2\"}\n");
}

TEST(Cli, CheckFile) {
    auto r = run_cli({"check", "--input", data("four_args.apx")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("P1 PASS\n"), std::string::npos);
    EXPECT_NE(r.out.find("Corollary1 N/A\n"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

    r = run_cli({"check", "--input", data("three_cycle.apx"), "--output", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["passed"]);

    r = run_cli({"check", "--input", data("malformed.apx")});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, CheckRandom) {
    const auto r = run_cli({"check", "--random", "25", "--size", "5", "--seed", "3"});
    EXPECT_EQ(r.code, 0);
    std::size_t lines = 0;
    for (char c : r.out)
        lines += c == '\n';
    EXPECT_EQ(lines, 25u);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(r.out, run_cli({"check", "--random", "25", "--size", "5", "--seed", "3"}).out);
}

TEST(Cli, DisputeTree) {
    auto r = run_cli({"dispute-tree", "--input", data("four_args.apx"), "--root", "x1", "--depth", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("digraph DisputeTree {", 0), 0u);
    r = run_cli({"dispute-tree", "--input", data("four_args.apx"), "--root", "x1", "--depth", "2",
                 "--output", "plain"});
    EXPECT_EQ(r.out, "0: x1^(0)\n1: x2^(1)\n2: x3^(2) x4^(2)\n");
}

TEST(Cli, NoAttacks) {
    const auto r = run_cli({"solve", "--input", data("no_attacks.apx"), "--output", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["iterations"], 0);
}
