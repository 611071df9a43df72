#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

#include "cli.hpp"

using namespace hookcomb;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::vector<std::string> body(const std::string& s) {
    std::vector<std::string> out;
    for (auto& l : lines(s))
        if (!l.empty() && l[0] != '#') out.push_back(l);
    return out;
}

// Runs the installed binary through the shell; returns the exit status.
int run_binary(const std::string& args, std::string* out = nullptr) {
    const std::string cmd = std::string(HOOKCOMB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::string text;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
    const int status = ::pclose(pipe);
    if (out) *out = text;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(CliEnumerate, Examples) {
    auto r = run({"enumerate", "--perimeter", "7", "--class", "ddistinct:2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"7", "6,4", "6,3", "6,2", "6,1", "5,3,1"}));

    r = run({"enumerate", "--perimeter", "1", "--class", "any"});
    EXPECT_EQ(r.out, "1\n");

    r = run({"enumerate", "--perimeter", "9", "--class", "distinct", "--parts", "4"});
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"6,5,4,3", "6,5,4,2", "6,5,4,1", "6,5,3,2", "6,5,3,1", "6,5,2,1",
                                                      "6,4,3,2", "6,4,3,1", "6,4,2,1", "6,3,2,1"}));
}

TEST(CliEnumerate, FormatsAndFilters) {
    auto r = run({"enumerate", "--perimeter", "3", "--format", "csv"});
    EXPECT_EQ(r.out, "partition,largest,length,size,perimeter,rank\n3,3,1,3,3,2\n\"2,2\",2,2,4,3,0\n"
                     "\"2,1\",2,2,3,3,0\n\"1,1,1\",1,3,3,3,-2\n");
    r = run({"enumerate", "--perimeter", "8", "--class", "distinct", "--largest", "6"});
    EXPECT_EQ(lines(r.out).size(), 10u);
    r = run({"enumerate", "--perimeter", "7", "--class", "distinct", "--rank", "2"});
    EXPECT_EQ(lines(r.out).back(), "5,2,1");
    r = run({"enumerate", "--perimeter", "2", "--format", "json"});
    EXPECT_EQ(r.out, "{\n  \"perimeter\": 2,\n  \"class\": \"any\",\n  \"filter\": null,\n  \"partitions\": [\n"
                     "    [\n      2\n    ],\n    [\n      1,\n      1\n    ]\n  ]\n}\n");
}

TEST(CliEnumerate, UsageErrors) {
    EXPECT_EQ(run({"enumerate"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--perimeter", "0"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--perimeter", "65"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--perimeter", "x"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--perimeter", "3", "--class", "gclass:0"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--perimeter", "3", "--format", "xml"}).code, 2);
    const auto r = run({"enumerate", "--perimeter", "3", "--parts", "1", "--rank", "0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("at most one"), std::string::npos);
}

TEST(CliValidate, RoundTrip) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"enumerate", "--perimeter", "9", "--class", "distinct", "--parts", "4", "--format", "json"},
          std::vector<std::string>{"enumerate", "--perimeter", "10", "--class", "gclass:2", "--format", "json"},
          std::vector<std::string>{"enumerate", "--perimeter", "6", "--format", "json"}}) {
        const auto listing = run(args);
        ASSERT_EQ(listing.code, 0);
        auto text_args = args;
        text_args.resize(text_args.size() - 2);
        const auto text = run(text_args);
        const auto v = run({"validate"}, listing.out);
        EXPECT_EQ(v.code, 0) << v.err;
        EXPECT_EQ(v.out, text.out);
    }
}

TEST(CliValidate, RejectsAlteredListings) {
    auto j = Json::parse(run({"enumerate", "--perimeter", "5", "--class", "odd", "--format", "json"}).out);
    auto missing = j;
    missing["partitions"].erase(missing["partitions"].begin());
    EXPECT_EQ(run({"validate"}, missing.dump()).code, 1);

    auto bad = j;
    bad["partitions"][0] = Json::array({1, 2});
    EXPECT_EQ(run({"validate"}, bad.dump()).code, 1);

    EXPECT_EQ(run({"validate"}, "{not json").code, 2);
    EXPECT_EQ(run({"validate"}, "{\"perimeter\": 3}").code, 2);
    auto bad_class = j;
    bad_class["class"] = "weird";
    EXPECT_EQ(run({"validate"}, bad_class.dump()).code, 2);
}

TEST(CliCount, Examples) {
    auto r = run({"count", "--perimeter", "1..10", "--class", "distinct"});
    std::vector<std::string> counts;
    for (const auto& l : body(r.out)) counts.push_back(l.substr(l.find(' ') + 1));
    EXPECT_EQ(counts, (std::vector<std::string>{"1", "1", "2", "3", "5", "8", "13", "21", "34", "55"}));

    r = run({"count", "--perimeter", "3", "--class", "any"});
    EXPECT_EQ(body(r.out), std::vector<std::string>{"3 4"});

    r = run({"count", "--perimeter", "1..6", "--class", "distinct", "--split-parity", "--format", "csv"});
    std::vector<std::string> e;
    for (const auto& l : lines(r.out)) e.push_back(l.substr(l.rfind(',') + 1));
    EXPECT_EQ(e, (std::vector<std::string>{"e", "-1", "-1", "0", "1", "1", "0"}));

    r = run({"count", "--perimeter", "60", "--class", "any", "--format", "json"});
    EXPECT_EQ(Json::parse(r.out)["rows"][0]["count"], "576460752303423488");
}

TEST(CliCount, UsageErrors) {
    EXPECT_EQ(run({"count", "--perimeter", "5..3"}).code, 2);
    EXPECT_EQ(run({"count", "--perimeter", "0..3"}).code, 2);
    EXPECT_EQ(run({"count", "--perimeter", "1..x"}).code, 2);
    EXPECT_EQ(run({"count", "--perimeter", "3", "--class", "odd", "--split-parity"}).code, 2);
}

TEST(CliGf, Examples) {
    EXPECT_EQ(run({"gf", "--class", "distinct", "--qbound", "3"}).out, "x*y*q + x^2*y*q^2 + x^2*y^2*q^3 + x^3*y*q^3\n");
    EXPECT_EQ(run({"gf", "--class", "any", "--qbound", "4", "--eval", "x=1,y=1"}).out, "q + 2*q^2 + 4*q^3 + 8*q^4\n");
    EXPECT_EQ(run({"gf", "--class", "distinct", "--qbound", "6", "--eval", "x=1,y=-1"}).out, "-q - q^2 + q^4 + q^5\n");
    EXPECT_EQ(run({"gf", "--class", "odd", "--qbound", "3", "--eval", "y=1"}).out, "x*q + x*q^2 + x*q^3 + x^3*q^3\n");
    const auto j = Json::parse(run({"gf", "--class", "distinct", "--qbound", "2", "--format", "json"}).out);
    EXPECT_EQ(j["variables"], "xyq");
    EXPECT_EQ(j["qbound"], 2);
    EXPECT_EQ(j["terms"][1]["coefficient"], "1");
    EXPECT_EQ(j["terms"][1]["exponents"], (Json{{"x", 2}, {"y", 1}, {"q", 2}}));
}

TEST(CliGf, UsageErrors) {
    EXPECT_EQ(run({"gf", "--qbound", "0"}).code, 2);
    EXPECT_EQ(run({"gf", "--eval", "z=1"}).code, 2);
    EXPECT_EQ(run({"gf", "--eval", "x=1,x=2"}).code, 2);
    EXPECT_EQ(run({"gf", "--eval", "x="}).code, 2);
}

TEST(CliVerify, ExitCodes) {
    auto r = run({"verify", "pentagonal-analogue", "--max-n", "30"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 24), "PASS pentagonal-analogue");
    EXPECT_EQ(run({"verify", "no-such-check"}).code, 2);
    EXPECT_EQ(run({"verify", "d-chain", "--d", "0"}).code, 2);
    EXPECT_EQ(run({"verify", "gf-coefficients", "--class", "bogus"}).code, 2);
    EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(CliVerify, JsonIsStable) {
    const auto a = run({"verify", "all", "--format", "json"});
    const auto b = run({"verify", "all", "--format", "json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = Json::parse(a.out);
    EXPECT_GE(j.size(), 10u);
    std::vector<std::string> ids;
    for (const auto& r : j) {
        ids.push_back(r["check_id"]);
        EXPECT_EQ(r["status"], "pass");
        EXPECT_TRUE(r["elapsed_ms"].is_null());
        EXPECT_FALSE(r.contains("counterexample"));
    }
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));

    const auto timed = Json::parse(run({"verify", "franklin", "--format", "json", "--timing"}).out);
    EXPECT_TRUE(timed[0]["elapsed_ms"].is_number());
    const auto csv = lines(run({"verify", "franklin", "--format", "csv"}).out);
    EXPECT_EQ(csv[0], "check_id,status,params,what");
    EXPECT_EQ(csv[1], "franklin,pass,\"{\"\"max_size\"\":40}\",");
}

TEST(CliTable, Examples) {
    auto rows = body(run({"table", "1"}).out);
    ASSERT_EQ(rows.size(), 10u);
    EXPECT_EQ(rows.front(), "6,5,4,3 | 7,7,7");
    rows = body(run({"table", "3"}).out);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows.back(), "5,2,1 | 5,1,1");
    const auto t4 = run({"table", "4"});
    EXPECT_EQ(body(t4.out).size(), 18u);
    int groups = 0;
    for (const auto& l : lines(t4.out))
        if (l.rfind("# perimeter ", 0) == 0) ++groups;
    EXPECT_EQ(groups, 7);
    EXPECT_EQ(body(t4.out).back(), "5,3,1 | 1,1,1,1,1,1,1 | 1,1,1,1,1,1,1");

    const auto csv = lines(run({"table", "2", "--format", "csv"}).out);
    EXPECT_EQ(csv[0], "group,distinct,odd");
    EXPECT_EQ(csv[1], ",\"6,5,4\",\"5,5,5,5\"");
    const auto j = Json::parse(run({"table", "4", "--format", "json"}).out);
    EXPECT_EQ(j["groups"].size(), 7u);
    EXPECT_EQ(run({"table", "5"}).code, 2);
    EXPECT_EQ(run({"table", "one"}).code, 2);
}

TEST(CliProfile, Conversions) {
    auto r = run({"profile", "--partition", "2,2,1"});
    EXPECT_EQ(r.out, "partition 2,2,1\nword ENENN\nperimeter 4\n");
    r = run({"profile", "--word", "ENNNEEENEENNNEEENN", "--blocks", "2"});
    EXPECT_EQ(lines(r.out).back(), "blocks initial 3; I 0; II 3; I 1");
    r = run({"profile", "--partition", "7", "--blocks", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("letter 4"), std::string::npos);
    EXPECT_EQ(run({"profile", "--word", "NEN"}).code, 2);
    EXPECT_EQ(run({"profile", "--partition", "1,2"}).code, 2);
    EXPECT_EQ(run({"profile"}).code, 2);
    EXPECT_EQ(run({"profile", "--partition", "1", "--word", "EN"}).code, 2);
}

TEST(CliGeneral, HelpAndMissingSubcommand) {
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("enumerate"), std::string::npos);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"verify", "--help"}).code, 0);
}

TEST(CliBinary, ExitCodesFromTheExecutable) {
    std::string out;
    EXPECT_EQ(run_binary("verify all", &out), 0);
    EXPECT_NE(out.find("PASS unrestricted-count"), std::string::npos);
    EXPECT_EQ(run_binary("verify no-such-check"), 2);
    EXPECT_EQ(run_binary("enumerate --perimeter 9 --class distinct --parts 4 --format json | " +
                         std::string(HOOKCOMB_CLI_PATH) + " validate"),
              0);
}
