#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "apostol/cli.hpp"

namespace apostol {
namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

std::vector<std::string> split_args(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> args;
    for (std::string a; is >> a;) args.push_back(a);
    return args;
}

CliRun run(const std::string& line) {
    std::ostringstream out, err;
    int code = cli::run(split_args(line), out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

TEST(CliExpand, EulerJsonEntry) {
    CliRun r = run("expand --preset euler --n 2 --format json");
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    auto j = nlohmann::ordered_json::parse(r.out);
    const auto& terms = j.at("entries").at(2).at("terms");
    EXPECT_EQ(terms.dump(), R"([{"coeff":"1","x":2},{"coeff":"-1","x":1}])");
    EXPECT_EQ(j.at("entries").at(2).at("n"), 2);
}

TEST(CliExpand, GenocchiStartsAtZero) {
    CliRun r = run("expand --preset genocchi --n 0");
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(lines_of(r.out).back(), "0, 0");
}

TEST(CliExpand, ExplicitFlagsConstantTerm) {
    CliRun r = run("expand --r 1 --k 0 --alphas -1 --a 1 --b e --phi unit --n 0");
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(lines_of(r.out).back(), "0, 1");
}

TEST(CliExpand, FlagErrorsExitTwo) {
    for (const char* line : {
             "expand --preset bernoulli --a sym --b sym",
             "expand --preset nope",
             "expand --r 2 --alphas 1/2",
             "expand --alphas 1/0",
             "expand --phi bessel",
             "expand --a pi",
             "expand --format yaml",
             "expand --bogus",
             "",
         }) {
        CliRun r = run(line);
        EXPECT_EQ(r.code, cli::kExitUsage) << line;
        EXPECT_TRUE(r.out.empty()) << line;
        if (*line != '\0') {
            EXPECT_NE(r.err.find("error"), std::string::npos) << line;
        }
    }
}

TEST(CliVerify, Examples) {
    CliRun sym = run("verify --identity symmetry --preset hermite --c 2 --d 3 --n 5");
    EXPECT_EQ(sym.code, cli::kExitOk);
    EXPECT_NE(sym.out.find("PASS symmetry"), std::string::npos);

    CliRun all = run("verify --identity all --preset euler --n 6");
    EXPECT_EQ(all.code, cli::kExitOk);
    auto ls = lines_of(all.out);
    ASSERT_EQ(ls.size(), 8U);
    for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_EQ(ls[i].rfind("PASS ", 0), 0U) << ls[i];

    CliRun trivial = run("verify --identity shift --n 0");
    EXPECT_EQ(trivial.code, cli::kExitOk);
    EXPECT_EQ(lines_of(trivial.out).back(), "PASS shift n<=0");
}

TEST(CliVerify, FlagErrorsExitTwo) {
    EXPECT_EQ(run("verify --identity nonsense").code, cli::kExitUsage);
    EXPECT_EQ(run("verify --identity symmetry --c 0").code, cli::kExitUsage);
    EXPECT_EQ(run("verify --preset bernoulli --a sym --b sym").code, cli::kExitUsage);
}

TEST(CliVerify, FailureReportsCounterexample) {
    Verdict v;
    v.passed = false;
    v.identity = IdentityId::DoubleIndex;
    v.max_n = 4;
    v.counterexample = Counterexample{{2, 1}, MultiPoly(1), MultiPoly(2)};
    std::ostringstream os;
    cli::print_verdict(v, os);
    EXPECT_EQ(os.str(), "FAIL double-index at (n,m)=(2,1): lhs = 1; rhs = 2\n");
}

TEST(CliTable, Examples) {
    CliRun b = run("table --preset bernoulli --n 2 --format csv");
    ASSERT_EQ(b.code, cli::kExitOk);
    EXPECT_EQ(lines_of(b.out).back(), "2, x^2 - x + 1/6");
    EXPECT_NE(lines_of(b.out).front().find("(-1)^r"), std::string::npos);

    CliRun h = run("table --preset hermite --n 2");
    EXPECT_EQ(lines_of(h.out).back(), "2, x^2 + 2*y");

    CliRun e = run("table --preset euler --n 0");
    EXPECT_EQ(lines_of(e.out).back(), "0, 1");

    EXPECT_EQ(run("table --preset chebyshev").code, cli::kExitUsage);
    EXPECT_EQ(run("table --n 3").code, cli::kExitUsage);
    EXPECT_EQ(run("table --preset hermite --param 3").code, cli::kExitUsage);
}

TEST(CliTable, LatexHasOneRowPerN) {
    CliRun r = run("table --preset laguerre --n 5 --format latex");
    ASSERT_EQ(r.code, cli::kExitOk);
    std::size_t rows = 0;
    for (const auto& l : lines_of(r.out)) {
        if (l.ends_with("$ \\\\")) ++rows;
    }
    EXPECT_EQ(rows, 6U);
}

TEST(CliHelp, ExitsZero) {
    CliRun r = run("--help");
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("expand"), std::string::npos);
}

struct Case {
    std::string name;
    std::string args;
};

std::vector<Case> golden_cases() {
    std::vector<Case> out;
    for (const auto& l : lines_of(read_file(std::string(APOSTOL_GOLDEN_DIR) + "/cases.txt"))) {
        auto bar = l.find('|');
        if (bar == std::string::npos) continue;
        out.push_back({l.substr(0, bar), l.substr(bar + 1)});
    }
    return out;
}

TEST(CliGolden, OutputsMatchCommittedFiles) {
    auto cases = golden_cases();
    ASSERT_GE(cases.size(), 10U);
    for (const auto& c : cases) {
        CliRun r = run(c.args);
        EXPECT_EQ(r.code, cli::kExitOk) << c.name << ": " << r.err;
        EXPECT_EQ(r.out, read_file(std::string(APOSTOL_GOLDEN_DIR) + "/" + c.name + ".out")) << c.name;
    }
}

TEST(CliGolden, JsonRoundTripIsByteIdentical) {
    std::vector<std::string> lines;
    for (const auto& c : golden_cases()) {
        if (c.args.find("--format json") != std::string::npos) lines.push_back(c.args);
    }
    for (const char* p : {"bernoulli", "euler", "genocchi", "gould-hopper", "hermite", "laguerre", "truncated-exp"}) {
        lines.push_back(std::string("table --format json --n 6 --preset ") + p);
        lines.push_back(std::string("expand --format json --n 6 --preset ") + p);
    }
    lines.push_back("table --format json --n 5 --preset genocchi --r 2 --lambda -3");
    lines.push_back("expand --format json --n 4 --r 3 --k 2 --alphas 1/2,-3,5/7 --a sym --b sym --phi truncated-exp:3");
    ASSERT_GE(lines.size(), 16U);
    for (const auto& line : lines) {
        CliRun r = run(line);
        ASSERT_EQ(r.code, cli::kExitOk) << line << ": " << r.err;
        auto j = nlohmann::ordered_json::parse(r.out);
        EXPECT_EQ(j.dump(2) + "\n", r.out) << line;
        PolyTable t = table_from_json(j);
        EXPECT_EQ(render_json(t), r.out) << line;
    }
}

TEST(CliFormats, CsvAndLatexCarryTheSamePolynomials) {
    for (const char* p : {"bernoulli", "euler", "genocchi", "gould-hopper", "hermite", "laguerre", "truncated-exp"}) {
        std::string base = std::string("table --n 6 --preset ") + p;
        CliRun json = run(base + " --format json");
        PolyTable t = table_from_json(nlohmann::ordered_json::parse(json.out));
        auto csv = lines_of(run(base + " --format csv").out);
        auto tex = lines_of(run(base + " --format latex").out);
        ASSERT_EQ(csv.size(), t.entries.size() + 2) << p;
        ASSERT_EQ(tex.size(), t.entries.size() + 4) << p;
        for (std::size_t n = 0; n < t.entries.size(); ++n) {
            EXPECT_EQ(csv[n + 2], std::to_string(n) + ", " + t.entries[n].str()) << p;
            EXPECT_EQ(tex[n + 3], std::to_string(n) + " & $" + t.entries[n].latex() + "$ \\\\") << p;
        }
    }
}

}  // namespace
}  // namespace apostol
