#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "hyperovals/cli.hpp"

using namespace hyperovals;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("usage errors exit with 2 and print a synopsis") {
    auto r = run({});
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"search", "--type", "c"}).code == 2);
    CHECK(run({"search", "--n", "4"}).code == 2);
    CHECK(run({"field", "--format", "xml"}).code == 2);
    r = run({"search", "--plane", "kn", "--n", "13", "--type", "a", "--domain", "full"});
    CHECK(r.code == 2);
    CHECK(r.err.find("InfeasibleDomain") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify subcommand") {
    auto r = run({"verify", "--construction", "od", "--n", "7", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["result"] == "PASS");
    CHECK(run({"verify", "--construction", "og", "--n", "9"}).code == 0);
    CHECK(run({"verify", "--construction", "line-og", "--n", "7"}).code == 0);
    CHECK(run({"verify", "--construction", "dual-table", "--table", "2", "--row", "7"}).code == 0);
    CHECK(run({"verify", "--construction", "od", "--n", "9", "--d", "3"}).code == 2);
    // x^4 + x is not a type-(a) function in the Knuth plane of order 32.
    r = run({"verify", "--construction", "coeffs", "--coeffs", "1,0,1,0,0"});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out)["result"] == "FAIL");
}

TEST_CASE("search reports are deterministic across runs and worker counts") {
    auto a = run({"search", "--n", "5", "--type", "a", "--workers", "1"});
    auto b = run({"search", "--n", "5", "--type", "a", "--workers", "2"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["classes"].size() == 5);
    for (const auto& c : doc["classes"]) CHECK_FALSE(c["table_match"].is_null());
    auto md = run({"search", "--n", "3", "--type", "b", "--format", "md"});
    CHECK(md.code == 0);
    CHECK(md.out.find("| No. |") != std::string::npos);
    auto empty = run({"search", "--plane", "kn_td", "--n", "5", "--type", "a", "--format", "csv"});
    CHECK(empty.code == 0);
    CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 1);
}

TEST_CASE("the remaining subcommands") {
    auto f = run({"field", "--n", "7"});
    CHECK(f.code == 0);
    CHECK(nlohmann::json::parse(f.out)["dickson_brute_force_mismatches"] == 0);
    CHECK(run({"check-axioms", "--plane", "kn_t_d", "--symplectic"}).code == 0);
    CHECK(run({"check-axioms", "--plane", "kn", "--symplectic"}).code == 1);
    CHECK(run({"check-axioms", "--plane", "kn"}).code == 0);
    auto c = run({"classify", "--construction", "table", "--table", "2", "--row", "4"});
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["table_match"] == 4);
    auto o = run({"orbit", "--construction", "table", "--table", "3", "--row", "6"});
    CHECK(o.code == 0);
    CHECK(nlohmann::json::parse(o.out)["has_six"] == true);
    CHECK(run({"orbit", "--construction", "os", "--n", "3"}).code == 0);
    CHECK(run({"design", "--construction", "os", "--n", "3", "--compare-bent"}).code == 0);
    CHECK(run({"diffset", "--construction", "os", "--n", "3"}).code == 0);
    CHECK(run({"bent", "--construction", "os", "--method", "spread"}).code == 0);
    CHECK(run({"bent", "--construction", "og"}).code == 2);
}
