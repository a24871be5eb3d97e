#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "thetalab/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "thetalab");
    std::ostringstream out, err;
    const int code = thetalab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
    CHECK(run({"count", "N", "1", "1", "1", "1", "1"}).out == "8\n");
    CHECK(run({"count", "t", "1", "1", "1", "1", "0"}).out == "16\n");
    CHECK(run({"count", "N", "1", "1", "4", "6", "11", "--backend", "enumerate"}).out == "32\n");
    const auto both = run({"count", "t'", "1", "1", "2", "2", "1", "--both"});
    CHECK(both.code == 0);
    CHECK(both.out.find("agree") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"count", "t", "1", "1", "4", "8", "1", "--format", "json"}).out);
    CHECK(j["value"] == 32);
    CHECK(j["form"] == nlohmann::json::array({1, 1, 4, 8}));
}

TEST_CASE("count errors exit 1") {
    CHECK(run({"count", "Q", "1", "1", "1", "1", "1"}).code == 1);
    CHECK(run({"count", "N", "0", "1", "1", "1", "1"}).code == 1);
    CHECK(run({"count", "N", "1", "1", "1", "1", "-1"}).code == 1);
    CHECK(run({"count", "N", "1", "1", "1", "1"}).code == 1);
    CHECK(run({"count", "N", "1", "1", "1", "1", "1", "--backend", "abacus"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK_FALSE(run({"frobnicate"}).err.empty());
}

TEST_CASE("series") {
    CHECK(run({"series", "phi", "1", "--precision", "5"}).out == "1 2 0 0 2\n");
    CHECK(run({"series", "psi", "2", "--precision", "7"}).out == "1 0 1 0 0 0 1\n");
    CHECK(run({"series", "N", "1", "1", "1", "1", "--precision", "3"}).out == "1 8 24\n");
    CHECK(run({"series", "t", "1", "1", "1", "1", "--precision", "2", "--format", "csv"}).out ==
          "n,coeff\n0,16\n1,64\n");
    CHECK(run({"series", "phi", "0"}).code == 1);
}

TEST_CASE("precision from the environment") {
    ::setenv("THETA_LAB_PRECISION", "4", 1);
    CHECK(run({"series", "phi", "1"}).out == "1 2 0 0\n");
    ::setenv("THETA_LAB_PRECISION", "lots", 1);
    CHECK(run({"series", "phi", "1"}).code == 1);
    ::unsetenv("THETA_LAB_PRECISION");
    CHECK(run({"series", "phi", "1"}).out.size() > 1024);
}

TEST_CASE("verify targets") {
    auto r = run({"verify", "1.12", "--precision", "2048"});
    CHECK(r.code == 0);
    CHECK(r.out == "PASS 1.12 tested=2048\n");
    CHECK(run({"verify", "identities", "--precision", "512"}).code == 0);
    r = run({"verify", "thm2.11"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS thm2.11", 0) == 0);
    CHECK(run({"verify", "thm2.4[a=3,k=1,m=2]", "--max-n", "80"}).code == 0);
    CHECK(run({"verify", "thm2.7b", "--max-n", "60"}).code == 0);
    CHECK(run({"verify", "t(1,1,1,1;n) == 16*t'(1,1,1,1;n)"}).code == 0);
}

TEST_CASE("verify reports counterexamples with exit 2") {
    auto r = run({"verify", "t(1,1,1,1;n) == 15*t'(1,1,1,1;n)", "--max-n", "5"});
    CHECK(r.code == 2);
    CHECK(r.out.rfind("FAIL adhoc failures=6 first: n=0 lhs=16 rhs=15 (mismatch)", 0) == 0);
    r = run({"verify", "thm2.1b-proofline", "--max-n", "40"});
    CHECK(r.code == 2);
    const auto j = nlohmann::json::parse(
        run({"verify", "N(1,1,1,1;n) == 8", "--max-n", "1", "--format", "json"}).out);
    CHECK(j[0]["status"] == "fail");
    CHECK(j[0]["n0_status"] == "fail");
    CHECK(j[0]["failures"][0]["n"] == 0);
}

TEST_CASE("verify operational errors exit 1") {
    CHECK(run({"verify", "thm9.9"}).code == 1);
    CHECK(run({"verify", "thm2.1a[a=2,m=0]"}).code == 1);
    CHECK(run({"verify", "nofamily[a=1]"}).code == 1);
    CHECK(run({"verify", "thm2.1a[a=x]"}).code == 1);
    CHECK(run({"verify", "N(1,1,1;n) == 1"}).code == 1);
    CHECK(run({"verify", "thm2.11", "--max-n", "-1"}).code == 1);
    const auto r = run({"verify", "thm2.11", "--max-n", "100", "--precision", "50"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--precision") != std::string::npos);
    CHECK(run({"verify", "thm2.11", "--max-n", "100", "--precision", "203"}).code == 1);
    CHECK(run({"verify", "thm2.11", "--max-n", "100", "--precision", "204"}).code == 0);
}

TEST_CASE("verify csv") {
    const auto r = run({"verify", "thm2.12", "--max-n", "9", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("id,n,lhs,rhs,status\nthm2.12,1,", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("scan-conjectures") {
    const auto a = run({"scan-conjectures", "--max-n", "120"});
    const auto b = run({"scan-conjectures", "--max-n", "120"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j.size() == 23);
    CHECK(j[0]["id"] == "2.1");
    CHECK(j[0]["status"] == "pass");
    CHECK(j[0]["tested_count"] == 61);
    CHECK_FALSE(j[0].contains("wall_time_ms"));

    const auto timed = nlohmann::json::parse(run({"scan-conjectures", "--ids", "2.3", "--timing"}).out);
    CHECK(timed[0].contains("wall_time_ms"));

    const auto csv = run({"scan-conjectures", "--ids", "2.12,2.5", "--max-n", "10", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("id,n,lhs,rhs,status\nconj2.12,1,", 0) == 0);

    CHECK(run({"scan-conjectures", "--ids", "2.1,9.9"}).code == 1);
}

TEST_CASE("--out writes a file") {
    const auto path = std::filesystem::temp_directory_path() / "thetalab_cli_test.json";
    const auto r = run({"scan-conjectures", "--ids", "2.2", "--max-n", "30", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j[0]["id"] == "2.2");
    std::filesystem::remove(path);
    CHECK(run({"formula", "t4", "1", "--out", "/nonexistent/dir/x"}).code == 1);
}

TEST_CASE("formula and list") {
    CHECK(run({"formula", "t1336", "0"}).out == "16\n");
    CHECK(run({"formula", "t1188", "1"}).out == "32\n");
    CHECK(run({"formula", "t1148", "1"}).out == "32\n");
    CHECK(run({"formula", "t11624", "2"}).code == 1);
    CHECK(run({"formula", "t77", "2"}).code == 1);
    const auto l = run({"list", "relations"});
    CHECK(l.code == 0);
    CHECK(l.out.find("thm2.11  t(1,1,4,6;n) == 2*N(1,1,4,6;2n+3) for n % 4 in {1,2}") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"list", "--format", "json"}).out);
    CHECK(j["conjectures"].size() == 23);
    CHECK(j["identities"].size() == 8);
    CHECK(run({"list", "bogus"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("documented command examples") {
    CHECK(run({"count", "t'", "1", "1", "2", "2", "1"}).out == "2\n");
    CHECK(run({"verify", "1.8", "--precision", "1024"}).code == 0);
    CHECK(run({"verify", "thm2.11", "--max-n", "200"}).code == 0);
    const auto two = nlohmann::json::parse(run({"scan-conjectures", "--ids", "2.6,2.7", "--max-n", "100"}).out);
    CHECK(two.size() == 2);
    const auto bad = run({"scan-conjectures", "--ids", "2.99"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("2.99") != std::string::npos);
}
