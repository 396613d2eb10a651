#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mcc/cli.hpp"
#include "json.hpp"

using namespace mcc;
using namespace mcc::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<const char*> args) {
    args.insert(args.begin(), "mcc");
    std::ostringstream out, err;
    int code = run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("range and format parsing") {
    CHECK(parse_range("2..15").first == 2);
    CHECK(parse_range("2..15").last == 15);
    CHECK(parse_range("7").last == 7);
    CHECK_THROWS_AS(parse_range("5..3"), InvalidArgument);
    CHECK_THROWS_AS(parse_range("a..b"), InvalidArgument);
    CHECK(parse_format("dot") == Format::Dot);
    CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("table output") {
    auto csv = cmd_table({2, 2}, Format::Csv);
    CHECK(csv == "p,cyc1,cyc2,prim1,prim2,q1,q2,f1,f2,g1,g2\n2,1,1,0,0,1,1,1,1,0,0\n");
    auto full = cmd_table({2, 15}, Format::Csv);
    CHECK(std::count(full.begin(), full.end(), '\n') == 15);
    auto json = nlohmann::json::parse(cmd_table({16, 16}, Format::Json));
    CHECK(json.dump().find("beyond_reference") != std::string::npos);
}

TEST_CASE("verify passes and catches an injected table error") {
    auto checks = cmd_verify({3, 8});
    for (auto& c : checks) {
        CAPTURE(c.invariant);
        CAPTURE(c.family);
        CAPTURE(c.p);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    auto broken = [](int p) {
        auto r = counting::count_row(p);
        r.q1 = r.q1 + 1;
        return r;
    };
    bool named = false;
    for (auto& c : cmd_verify({3, 3}, broken)) {
        if (c.invariant == "table" && !c.pass) named = c.detail.find("q1") != std::string::npos;
    }
    CHECK(named);
}

TEST_CASE("verify reports disconnected per2 period 3") {
    bool seen = false;
    for (auto& c : cmd_verify({3, 3})) {
        if (c.invariant == "genus" && c.family == "per2") {
            seen = true;
            CHECK(c.pass);
            CHECK(c.detail.find("disconnected: 2 components") != std::string::npos);
        }
    }
    CHECK(seen);
}

TEST_CASE("scan findings") {
    auto r = scan_period(Family::Per1, 5);
    CHECK(r.largest == 8);
    CHECK(r.bigons == 0);
    CHECK(*r.conjectured_largest == 8);
    auto s = scan_period(Family::Per2, 6);
    CHECK(s.largest == *s.conjectured_largest);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"table"}).code == kExitOk);
    CHECK(run_cli({"build", "--family", "per1", "--period", "5"}).code == kExitOk);
    CHECK(run_cli({"build", "--family", "per1", "--period", "5", "--algorithm", "bar"}).code == kExitOk);
    CHECK(run_cli({"verify", "--range", "3..5"}).code == kExitOk);
    auto per2 = run_cli({"verify", "--family", "per2", "--period", "5", "--format", "csv"});
    CHECK(per2.code == kExitOk);
    CHECK(per2.out.find(",per1,") == std::string::npos);
    CHECK(per2.out.find(",per2,") != std::string::npos);
    CHECK(run_cli({"verify", "--range", "3..17"}).code == kExitUsage);
    CHECK(run_cli({"scan", "--range", "5..6", "--format", "json"}).code == kExitOk);
    CHECK(run_cli({}).code == kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == kExitUsage);
    CHECK(run_cli({"build", "--family", "per3", "--period", "5"}).code == kExitUsage);
    CHECK(run_cli({"build", "--family", "per1", "--period", "5", "--format", "xml"}).code == kExitUsage);
    CHECK(run_cli({"table", "--range", "9..3"}).code == kExitUsage);
    CHECK(run_cli({"build", "--family", "per2", "--period", "5", "--algorithm", "bar"}).code == kExitUsage);
}

TEST_CASE("build output is deterministic and can go to a file") {
    auto a = run_cli({"build", "--family", "per2", "--period", "6", "--format", "json"});
    auto b = run_cli({"build", "--family", "per2", "--period", "6", "--format", "json"});
    CHECK(a.out == b.out);
    auto path = std::filesystem::temp_directory_path() / "mcc_cli_test.dot";
    auto r = run_cli({"build", "--family", "per1", "--period", "4", "--format", "dot", "--out", path.c_str()});
    CHECK(r.code == kExitOk);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "graph sigma_4_1 {");
    std::filesystem::remove(path);
}
