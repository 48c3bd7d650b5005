#include <catch2/catch_amalgamated.hpp>

#include "quadcf/numbers.hpp"
#include "test_support.hpp"

using namespace quadcf;

TEST_CASE("make_rational normalizes sign and reduces") {
    Rational r = make_rational(3, -6);
    REQUIRE(num(r) == -1);
    REQUIRE(den(r) == 2);
    REQUIRE_THROWS_AS(make_rational(1, 0), DivisionByZero);
}

TEST_CASE("floor and half-up rounding") {
    REQUIRE(floor_rat(make_rational(7, 2)) == 3);
    REQUIRE(floor_rat(make_rational(-7, 2)) == -4);
    REQUIRE(floor_rat(Rational(5)) == 5);
    REQUIRE(floor_rat(Rational(-5)) == -5);

    // ties round up: [x + 1/2]
    REQUIRE(round_half_up(make_rational(1, 2)) == 1);
    REQUIRE(round_half_up(make_rational(-1, 2)) == 0);
    REQUIRE(round_half_up(make_rational(-3, 2)) == -1);
    REQUIRE(round_half_up(make_rational(3, 4)) == 1);
    REQUIRE(round_half_up(make_rational(-3, 4)) == -1);
    REQUIRE(round_half_up(Rational(0)) == 0);
}

TEST_CASE("sqrt_interval encloses, narrows, and collapses on squares") {
    auto rng = testsupport::make_rng(1);
    for (int i = 0; i < 200; ++i) {
        Rational q = testsupport::random_rational(rng, 1000, 50);
        if (q < 0) q = -q;
        RatInterval iv = sqrt_interval(q, 64);
        REQUIRE(iv.lo * iv.lo <= q);
        REQUIRE(iv.hi * iv.hi >= q);
        REQUIRE(iv.width() <= make_rational(1, Integer(1) << 64));

        // doubling precision never widens
        RatInterval iv2 = sqrt_interval(q, 128);
        REQUIRE(iv2.lo >= iv.lo);
        REQUIRE(iv2.hi <= iv.hi);
    }
    RatInterval exact = sqrt_interval(make_rational(9, 4), 32);
    REQUIRE(exact.lo == exact.hi);
    REQUIRE(exact.lo == make_rational(3, 2));
}

TEST_CASE("is_rational_square") {
    Rational root;
    REQUIRE(is_rational_square(make_rational(49, 25), &root));
    REQUIRE(root == make_rational(7, 5));
    REQUIRE_FALSE(is_rational_square(Rational(5)));
    REQUIRE_FALSE(is_rational_square(Rational(-4)));
    REQUIRE(is_rational_square(Rational(0)));
}

TEST_CASE("exact sign of a + b sqrt(r)") {
    // 3 - 2 sqrt(2) > 0, 2 - 2 sqrt(2) < 0, 2 - sqrt(4) == 0
    REQUIRE(sign_a_plus_b_sqrt(3, -2, 2) == 1);
    REQUIRE(sign_a_plus_b_sqrt(2, -2, 2) == -1);
    REQUIRE(sign_a_plus_b_sqrt(2, -1, 4) == 0);
    REQUIRE(sign_a_plus_b_sqrt(-3, 2, 2) == -1);
    REQUIRE(sign_a_plus_b_sqrt(-2, 2, 2) == 1);
    REQUIRE(sign_a_plus_b_sqrt(0, -5, 3) == -1);
    REQUIRE(sign_a_plus_b_sqrt(7, 0, 3) == 1);
}

TEST_CASE("interval arithmetic covers products and powers") {
    RatInterval a{make_rational(1, 3), make_rational(1, 2)};
    RatInterval b{-2, 3};
    RatInterval p = a * b;
    REQUIRE(p.lo == -1);
    REQUIRE(p.hi == make_rational(3, 2));

    RatInterval r{2, 2};
    RatInterval cube = pow_interval(r, 3);
    REQUIRE(cube.lo == 8);
    REQUIRE(cube.hi == 8);
    RatInterval invsq = pow_interval(r, -2);
    REQUIRE(invsq.lo == make_rational(1, 4));
    REQUIRE(invsq.hi == make_rational(1, 4));
    REQUIRE_THROWS_AS(inv_interval(RatInterval{-1, 1}), CertificationFailure);
}

TEST_CASE("decimal rendering") {
    REQUIRE(decimal_string(make_rational(1, 4), 6) == "0.25");
    REQUIRE(decimal_string(make_rational(-7, 2), 6) == "-3.5");
    REQUIRE(decimal_string(Rational(0)) == "0");
    REQUIRE(decimal_string(make_rational(1, 3), 5) == "0.33333");
    REQUIRE(decimal_string_upper(make_rational(1, 3), 5) == "0.33334");
    REQUIRE(rational_string(make_rational(-8, 21)) == "-8/21");
}

TEST_CASE("rational parsing round-trips") {
    auto r = parse_rational("-8/21");
    REQUIRE(r);
    REQUIRE(*r == make_rational(-8, 21));
    REQUIRE(parse_rational("42"));
    REQUIRE_FALSE(parse_rational("1/0"));
    REQUIRE_FALSE(parse_rational("x"));
}
