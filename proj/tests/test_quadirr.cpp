#include <doctest.h>

#include <cmath>
#include <vector>

#include "sg/errors.hpp"

#include "sg/quadirr.hpp"

using namespace sg;

TEST_CASE("normal form: square factors leave the radicand") {
    // sqrt(12)/2 = sqrt(3)
    QuadIrr v = QuadIrr::surd(0, 1, 12, 2);
    CHECK(v.p() == 0);
    CHECK(v.c() == 1);
    CHECK(v.d() == 3);
    CHECK(v.q() == 1);
    CHECK(v.to_string() == "√3");
}

TEST_CASE("normal form: d = 1 and c = 0 collapse to rationals") {
    CHECK(QuadIrr::surd(1, 3, 1, 2) == QuadIrr::rational(4, 2));
    CHECK(QuadIrr::rational(4, 2) == QuadIrr::integer(2));
    CHECK(QuadIrr::surd(5, 0, 17, 1) == QuadIrr::integer(5));
    CHECK(QuadIrr::surd(2, 2, 16, 2) == QuadIrr::integer(5)); // (2 + 2*4)/2
}

TEST_CASE("normal form: shared factors and denominator sign") {
    QuadIrr v = QuadIrr::surd(-2, -4, 5, -6);
    CHECK(v.q() == 3);
    CHECK(v.p() == 1);
    CHECK(v.c() == 2);
    CHECK(v.d() == 5);
    CHECK(QuadIrr::rational(-3, -6) == QuadIrr::rational(1, 2));
}

TEST_CASE("exact ordering without floating point") {
    QuadIrr golden = QuadIrr::surd(1, 1, 5, 2);   // 1.618...
    QuadIrr sqrt3 = QuadIrr::surd(0, 1, 3, 1);    // 1.732...
    QuadIrr five_thirds = QuadIrr::rational(5, 3); // 1.666...
    CHECK(golden < five_thirds);
    CHECK(five_thirds < sqrt3);
    CHECK(golden < sqrt3);
    CHECK(sqrt3 > golden);

    // mixed radicals close together: sqrt(2)+1 = 2.4142 vs sqrt(6) = 2.449
    QuadIrr a = QuadIrr::surd(1, 1, 2, 1);
    QuadIrr b = QuadIrr::surd(0, 1, 6, 1);
    CHECK(a < b);
    CHECK(QuadIrr::compare(a, a) == 0);

    // negatives reverse
    CHECK(b.negate() < a.negate());
    CHECK(QuadIrr::surd(1, -1, 17, 2) < QuadIrr::integer(-1));
}

TEST_CASE("ordering agrees with numeric evaluation on a family grid") {
    std::vector<QuadIrr> values;
    for (long long p = -3; p <= 3; ++p)
        for (long long c = -2; c <= 2; ++c)
            for (long long d : {0LL, 2LL, 5LL, 17LL})
                for (long long q : {1LL, 2LL, 3LL})
                    values.push_back(QuadIrr::surd(p, c, d, q));
    for (const auto& a : values) {
        for (const auto& b : values) {
            int cmp = QuadIrr::compare(a, b);
            long double diff = a.to_long_double() - b.to_long_double();
            if (cmp == 0)
                CHECK(std::fabs(static_cast<double>(diff)) < 1e-12);
            else
                CHECK((cmp < 0) == (diff < 0));
        }
    }
}

TEST_CASE("affine maps used by the spectrum transforms") {
    QuadIrr v = QuadIrr::surd(1, 1, 17, 2);
    CHECK(v.conjugate() == QuadIrr::surd(1, -1, 17, 2));
    CHECK(v.negate() == QuadIrr::surd(-1, -1, 17, 2));
    CHECK(v.add_integer(2) == QuadIrr::surd(5, 1, 17, 2));
    // -1 - v
    CHECK(v.subtract_from(-1) == QuadIrr::surd(-3, -1, 17, 2));
    CHECK(QuadIrr::integer(3).subtract_from(5) == QuadIrr::integer(2));
}

TEST_CASE("sign of a quadratic irrational") {
    CHECK(QuadIrr::surd(1, 1, 17, 2).sign() == 1);
    CHECK(QuadIrr::surd(1, -1, 17, 2).sign() == -1); // (1-sqrt17)/2 < 0
    CHECK(QuadIrr::surd(5, -1, 17, 2).sign() == 1);  // sqrt17 < 5
    CHECK(QuadIrr().sign() == 0);
    CHECK(QuadIrr::integer(-7).sign() == -1);
}

TEST_CASE("rendering") {
    CHECK(QuadIrr::surd(1, 1, 17, 2).to_string() == "(1+√17)/2");
    CHECK(QuadIrr::surd(1, -1, 17, 2).to_string() == "(1-√17)/2");
    CHECK(QuadIrr::integer(-1).to_string() == "-1");
    CHECK(QuadIrr::rational(1, 2).to_string() == "1/2");
    CHECK(QuadIrr::surd(0, -1, 3, 1).to_string() == "-√3");
    CHECK(QuadIrr::surd(0, 2, 3, 1).to_string() == "2√3");
    CHECK(QuadIrr::surd(0, 1, 3, 2).to_string() == "√3/2");
}

TEST_CASE("errors: zero denominator and negative radicand") {
    CHECK_THROWS_AS(QuadIrr::surd(1, 1, 5, 0), precondition_error);
    CHECK_THROWS_AS(QuadIrr::surd(1, 1, -4, 1), precondition_error);
}
