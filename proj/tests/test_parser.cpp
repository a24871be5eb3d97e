#include <random>

#include "doctest.h"
#include "thetalab/conjectures.hpp"
#include "thetalab/relations.hpp"

using namespace thetalab;

namespace {

void require_same(const RelationSpec& a, const RelationSpec& b) {
    REQUIRE(a.lhs == b.lhs);
    REQUIRE(a.rhs == b.rhs);
    REQUIRE(a.predicate == b.predicate);
}

std::vector<RelationSpec> everything() {
    std::vector<RelationSpec> out = builtin_registry().specs;
    for (const auto& family : builtin_registry().families)
        for (auto& s : instances(family)) out.push_back(std::move(s));
    for (auto& s : instances(erratum_probe_family())) out.push_back(std::move(s));
    for (const auto& rec : conjectures::conjecture_registry()) out.push_back(rec.spec);
    return out;
}

}  // namespace

TEST_CASE("parses a registry statement") {
    const auto spec = parse_relation("t(1,1,4,6;n) == 2*N(1,1,4,6;2n+3) for n % 4 in {1,2}", "x");
    CHECK(spec.id == "x");
    require_same(spec, *find_spec("thm2.11"));
    CHECK(print(spec) == "t(1,1,4,6;n) == 2*N(1,1,4,6;2n+3) for n % 4 in {1,2}");
}

TEST_CASE("accepts spelling variants") {
    const auto a = parse_relation("t(6,4,1,1;n)==2*N(1,1,4,6;2*n+3) for n%4 in {2,1}");
    const auto b = parse_relation("  t ( 1 , 1 , 4 , 6 ; n )  ==  2 * N(1,1,4,6; 2 n + 3)  for n % 4 in { 1, 2 } ");
    require_same(a, *find_spec("thm2.11"));
    require_same(b, *find_spec("thm2.11"));
    const auto c = parse_relation("-N(1,1,1,1;n) + 16 == -1/2*t'(1,1,1,1;7) + N(1,1,2,2;0)");
    CHECK(c.lhs.terms.size() == 2);
    CHECK(c.lhs.terms[0].coeff == Rational(-1));
    CHECK_FALSE(c.lhs.terms[1].atom.has_value());
    CHECK(c.rhs.terms[0].atom->kind == CountKind::tprime);
    CHECK(c.rhs.terms[0].atom->arg == Affine{0, 7});
    CHECK(parse_relation("N(1,1,1,1;n-1) == 0").lhs.terms[0].atom->arg == Affine{1, -1});
}

TEST_CASE("parse errors carry a message and position") {
    auto message_of = [](const char* text) {
        try {
            parse_relation(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("N(1,1,1;n) == 1").find("four entries") != std::string::npos);
    CHECK(message_of("M(1,1,1,1;n) == 1").find("unknown count kind") != std::string::npos);
    CHECK(message_of("N(1,1,1,1;n) == 1 for n % 4 in {5}").find("outside") != std::string::npos);
    CHECK(message_of("N(1,1,1,1;n) == 1 junk").find("trailing") != std::string::npos);
    CHECK(message_of("N(0,1,1,1;n) == 1").find("positive") != std::string::npos);
    CHECK(message_of("N(1,1,1,1;n) == 1/0").find("denominator") != std::string::npos);
    CHECK(message_of("N(1,1,1,1;n)") != "no error");
    CHECK(message_of("N(1,1,1,1;n) == 1 for n % 0 in {0}") != "no error");
    try {
        parse_relation("N(1,1,1,1;n) == 1 junk");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 18);
    }
}

TEST_CASE("print and parse round-trip every built-in relation") {
    const auto specs = everything();
    CHECK(specs.size() > 300);
    for (const auto& s : specs) {
        CAPTURE(s.id);
        const auto text = print(s);
        const auto back = parse_relation(text, s.id);
        require_same(back, s);
        REQUIRE(print(back) == text);
    }
}

TEST_CASE("round-trip on random relations") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> small(1, 30), coef(-9, 9), den(1, 6), kind(0, 2), terms(1, 4);
    std::uniform_int_distribution<std::int64_t> add(-20, 20), mul(0, 9), mod(1, 12);
    for (int i = 0; i < 500; ++i) {
        RelationSpec spec;
        for (auto* side : {&spec.lhs, &spec.rhs}) {
            const auto count = terms(rng);
            for (std::int64_t j = 0; j < count; ++j) {
                auto c = Rational(coef(rng), den(rng));
                if (c == Rational(0)) c = Rational(1);
                if (kind(rng) == 0 && j > 0) {
                    side->terms.push_back({c, std::nullopt});
                    continue;
                }
                const auto k = static_cast<CountKind>(kind(rng));
                side->terms.push_back({c, Atom(k, FormTuple(small(rng), small(rng), small(rng), small(rng)),
                                               Affine{mul(rng), add(rng)})});
            }
        }
        const auto m = mod(rng);
        std::vector<std::int64_t> rs;
        for (std::int64_t r = 0; r < m; ++r)
            if (rng() % 2 == 0) rs.push_back(r);
        if (rs.empty()) rs.push_back(0);
        spec.predicate = Predicate::residue_classes(m, rs);
        const auto text = print(spec);
        CAPTURE(text);
        require_same(parse_relation(text), spec);
    }
}

TEST_CASE("trivial and malformed statements") {
    const auto same = parse_relation("t(1,1,1,1;n) == t(1,1,1,1;n)");
    auto backend = make_backend("series");
    CHECK(check(same, 50, *backend).passed());
    CHECK(check(same, 50, *backend).tested_count() == 51);
    CHECK_THROWS_AS(parse_relation("t(1,2;n) == 1"), ParseError);
}
