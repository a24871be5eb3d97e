#include <stdexcept>

#include "doctest.h"
#include "thetalab/conjectures.hpp"

using namespace thetalab;

namespace {

std::vector<std::string> all_ids() {
    std::vector<std::string> ids;
    for (const auto& rec : conjectures::conjecture_registry()) ids.push_back(rec.id);
    return ids;
}

}  // namespace

TEST_CASE("registry shape") {
    const auto& reg = conjectures::conjecture_registry();
    REQUIRE(reg.size() == 23);
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(reg[i].id == "2." + std::to_string(i + 1));
        CHECK(reg[i].spec.id == "conj" + reg[i].id);
        CHECK(reg[i].spec.status == Status::conjectured);
        CHECK_FALSE(reg[i].quote.empty());
        CHECK(reg[i].flags.empty() == (reg[i].id != "2.5"));
    }
    CHECK(conjectures::find("2.5").flags == std::vector<std::string>{"atypical-shape"});
    CHECK_THROWS_AS(conjectures::find("2.24"), std::invalid_argument);
}

TEST_CASE("frozen statements") {
    CHECK(print(conjectures::find("2.1").spec) ==
          "t(1,1,4,6;n) == 2/3*N(1,1,4,6;8n+12) - N(1,1,4,6;2n+3) for n % 4 in {0,3}");
    CHECK(print(conjectures::find("2.3").spec) == "t(1,3,8,8;3n) == 1/3*N(1,3,8,8;24n+20) - 2*N(1,3,8,8;6n+5)");
    CHECK(print(conjectures::find("2.5").spec) == "t(1,2,4,17;n) == 4*N(1,2,4,17;n+3) for n % 8 in {0,2}");
}

TEST_CASE("every conjecture holds to 400 and the backends agree") {
    conjectures::ScanOptions opts;
    opts.n_max = 400;
    const auto results = conjectures::scan(all_ids(), opts);
    REQUIRE(results.size() == 23);
    for (const auto& r : results) {
        CAPTURE(r.id);
        CHECK(r.passed());
        CHECK(r.spot_checks_run == 10);
        CHECK(r.backends_consistent());
    }
    CHECK(results[0].report.tested_count() == 201);
}

TEST_CASE("enumeration backend agrees on a small scan") {
    conjectures::ScanOptions opts;
    opts.n_max = 60;
    opts.backend = "enumerate";
    const auto results = conjectures::scan({"2.1", "2.12", "2.23"}, opts);
    for (const auto& r : results) {
        CHECK(r.passed());
        CHECK(r.backend == "enumerate");
        CHECK(r.spot_checks_run == 0);
    }
}

TEST_CASE("json is deterministic without timing") {
    conjectures::ScanOptions opts;
    opts.n_max = 200;
    const auto a = conjectures::scan({"2.2", "2.5"}, opts);
    const auto b = conjectures::scan({"2.2", "2.5"}, opts);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(conjectures::to_json(a[i], false).dump() == conjectures::to_json(b[i], false).dump());
        CHECK_FALSE(conjectures::to_json(a[i], false).contains("wall_time_ms"));
        CHECK(conjectures::to_json(a[i], true).contains("wall_time_ms"));
    }
    const auto j = conjectures::to_json(a[1], false);
    CHECK(j["id"] == "2.5");
    CHECK(j["status"] == "pass");
    CHECK(j["n_max"] == 200);
    CHECK(j["flags"] == nlohmann::json::array({"atypical-shape"}));
    CHECK(j["spot_checks"]["run"] == 10);
    CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("a counterexample produces a witness") {
    conjectures::ScanOptions opts;
    opts.n_max = 50;
    auto result = conjectures::scan({"2.1"}, opts).front();
    auto spec = conjectures::find("2.1").spec;
    spec.rhs.terms[0].coeff = Rational(1, 4);
    auto backend = make_backend("series");
    result.report = check(spec, 50, *backend);
    REQUIRE_FALSE(result.passed());
    const auto j = conjectures::to_json(result, false);
    CHECK(j["status"] == "counterexample");
    CHECK(j["witness"]["n"] == result.report.first_failure()->n);
    CHECK(j["witness"].contains("lhs"));
    CHECK(j["witness"].contains("rhs"));
}

TEST_CASE("unknown ids are rejected") {
    CHECK_THROWS_AS(conjectures::scan({"2.1", "7.7"}, {}), std::invalid_argument);
}

TEST_CASE("predicates from the records") {
    CHECK(conjectures::find("2.6").spec.predicate == Predicate::residue_classes(5, {2, 3}));
    CHECK(conjectures::find("2.19").spec.predicate == Predicate::residue_classes(9, {8}));
}

TEST_CASE("scan edge cases") {
    CHECK(conjectures::scan({}, {}).empty());
    conjectures::ScanOptions opts;
    opts.n_max = 0;
    const auto r = conjectures::scan({"2.5"}, opts).front();
    REQUIRE(r.report.tested_count() == 1);
    CHECK(r.report.evaluations[0].n == 0);
    CHECK(r.passed());
}
