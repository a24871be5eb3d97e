#include <stdexcept>

#include "doctest.h"
#include "thetalab/closedform.hpp"
#include "thetalab/oracle.hpp"

using namespace thetalab;

namespace {

// Direct sum over a box, independent of the library's representation walk.
std::int64_t naive_rep_sum_x(std::int64_t D, std::int64_t c) {
    std::int64_t s = 0;
    for (std::int64_t x = -100; x <= 100; ++x)
        for (std::int64_t y = -100; y <= 100; ++y)
            if (x * x + c * y * y == D && ((x % 4) + 4) % 4 == 1) s += x;
    return s;
}

}  // namespace

TEST_CASE("rep_sum_x") {
    CHECK(closedform::rep_sum_x(9, 4) == -3);
    CHECK(closedform::rep_sum_x(13, 4) == -6);
    CHECK(closedform::rep_sum_x(11, 2) == -6);
    for (std::int64_t D = 1; D <= 2000; D += 2) {
        REQUIRE(closedform::rep_sum_x(D, 4) == naive_rep_sum_x(D, 4));
        REQUIRE(closedform::rep_sum_x(D, 2) == naive_rep_sum_x(D, 2));
    }
    CHECK_THROWS(closedform::rep_sum_x(9, 3));
}

TEST_CASE("c_coefficient") {
    CHECK(closedform::c_coefficient(FormTuple(1, 1, 1, 2)) == 16 + 4 * 3 * 2 * 1);
    CHECK(closedform::c_coefficient(FormTuple(1, 1, 1, 3)) == 16 + 8 * 3);
    CHECK(closedform::c_coefficient(FormTuple(2, 2, 2, 2)) == 16);
    CHECK_THROWS_AS(closedform::c_coefficient(FormTuple(1, 1, 1, 1)), std::domain_error);
    CHECK_THROWS_AS(closedform::c_coefficient(FormTuple(1, 1, 1, 6)), std::domain_error);
}

TEST_CASE("frozen closed-form values") {
    CHECK(closedform::t1336(0) == 16);
    CHECK(closedform::t1336(1) == 16);
    CHECK(closedform::t1336(2) == 0);
    CHECK(closedform::t1188(0) == 16);
    CHECK(closedform::t1188(1) == 32);
    CHECK(closedform::t1188(2) == 16);
    CHECK(closedform::t1148(0) == 16);
    CHECK(closedform::t1148(1) == 32);
    CHECK(closedform::t1148(2) == 16);
    CHECK(closedform::t11624_closed(0) == 16);
    CHECK(closedform::t11624_closed(4) == 32);
    CHECK(closedform::t11624_closed(8) == 16);
    CHECK(closedform::t4_legendre(0) == 1);
    CHECK(closedform::t1122_williams(0) == 1);
    CHECK(closedform::t1122_williams(1) == 2);
}

TEST_CASE("closed forms agree with enumeration") {
    for (std::int64_t n = 0; n <= 300; ++n) {
        CAPTURE(n);
        REQUIRE(closedform::t4_legendre(n) == oracle::count_tprime(FormTuple(1, 1, 1, 1), n));
        REQUIRE(closedform::t1122_williams(n) == oracle::count_tprime(FormTuple(1, 1, 2, 2), n));
        REQUIRE(closedform::t1188(n) == oracle::count_t(FormTuple(1, 1, 8, 8), n));
        REQUIRE(closedform::t1148(n) == oracle::count_t(FormTuple(1, 1, 4, 8), n));
        REQUIRE(closedform::t1336(n) == oracle::count_t(FormTuple(1, 3, 3, 6), n));
        if (n % 4 == 0) REQUIRE(closedform::t11624_closed(n) == oracle::count_t(FormTuple(1, 1, 6, 24), n));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(closedform::t11624_closed(2), std::domain_error);
    CHECK_THROWS_AS(closedform::evaluate("t9999", 1), std::invalid_argument);
    CHECK(closedform::formula_names().size() == 6);
    for (const auto& name : closedform::formula_names()) CHECK_NOTHROW(closedform::evaluate(name, 8));
}

TEST_CASE("more coefficient examples") {
    CHECK(closedform::c_coefficient(FormTuple(1, 1, 2, 2)) == 32);
    CHECK(closedform::t11624_closed(4) == oracle::count_t(FormTuple(1, 1, 3, 3), 1));
}
