#include <catch2/catch_amalgamated.hpp>

#include "quadcf/ball.hpp"
#include "test_support.hpp"

using namespace quadcf;
using testsupport::make_rng;
using testsupport::random_rational;

TEST_CASE("ball arithmetic keeps containment") {
    auto rng = make_rng(40);
    for (int i = 0; i < 100; ++i) {
        // exact points wrapped in slightly fattened balls
        Rational ar = random_rational(rng), ai = random_rational(rng);
        Rational br = random_rational(rng), bi = random_rational(rng);
        Rational fat = make_rational(1, 1000);
        Ball a{ar, ai, fat, 64}, b{br, bi, fat, 64};

        Ball sum = a + b;
        REQUIRE(sum.contains(ar + br, ai + bi));
        Ball prod = a * b;
        REQUIRE(prod.contains(ar * br - ai * bi, ar * bi + ai * br));
        if ((br != 0 || bi != 0) && b.abs_lower(64) > 0) {
            Ball quot = a / b;
            Rational n = br * br + bi * bi;
            // exact quotient of the midpoints lies inside
            Rational qr = (ar * br + ai * bi) / n, qi = (ai * br - ar * bi) / n;
            REQUIRE(quot.contains(qr, qi));
        }
    }
}

TEST_CASE("principal square root: branch convention") {
    // sqrt(-1) = i (theta = pi branch)
    Ball m1 = principal_sqrt(Ball::exact(-1, 0), 64);
    REQUIRE(m1.contains(0, 1));
    REQUIRE(m1.radius() < make_rational(1, Integer(1) << 32));

    // sqrt(4) = 2 exactly
    Ball four = principal_sqrt(Ball::exact(4, 0), 64);
    REQUIRE(four.contains(2, 0));
    REQUIRE(four.radius() == 0);

    // sqrt(2i) = 1 + i: oracle (1+i)^2 = 2i, arg(1+i) in (-pi/2, pi/2]
    FieldElement onei{LatticeKind::Gaussian, 1, 1};
    REQUIRE(onei * onei == FieldElement(LatticeKind::Gaussian, 0, 2));
    Ball s2i = principal_sqrt(Ball::exact(0, 2), 64);
    REQUIRE(s2i.contains(1, 1));

    // negative imaginary: sqrt(-2i) = 1 - i
    Ball sm2i = principal_sqrt(Ball::exact(0, -2), 64);
    REQUIRE(sm2i.contains(1, -1));

    REQUIRE(principal_sqrt(Ball::zero(), 64).is_exact());
}

TEST_CASE("principal square root squares back over random exact inputs") {
    auto rng = make_rng(41);
    for (int i = 0; i < 100; ++i) {
        Rational re = random_rational(rng), im = random_rational(rng);
        if (re == 0 && im == 0) continue;
        Ball s = principal_sqrt(Ball::exact(re, im), 96);
        Ball sq = s * s;
        REQUIRE(sq.contains(re, im));
        // arg in (-pi/2, pi/2]: Re >= 0; Re == 0 only with Im > 0
        REQUIRE(s.re() + s.radius() >= 0);
    }
}

TEST_CASE("principal square root of fat balls: Lipschitz containment") {
    auto rng = make_rng(42);
    for (int i = 0; i < 50; ++i) {
        Rational re = abs(random_rational(rng, 40, 8)) + 10;  // keep clear of the cut
        Rational im = random_rational(rng, 20, 8);
        Ball z{re, im, make_rational(1, 100), 64};
        Ball s = principal_sqrt(z, 64);
        // the sqrt of the midpoint is inside; so is the sqrt of a shifted point
        Ball mid_root = principal_sqrt(Ball::exact(re, im), 128);
        REQUIRE(s.contains(mid_root.re(), mid_root.im()));
        Ball shifted = principal_sqrt(Ball::exact(re + make_rational(1, 200), im), 128);
        REQUIRE(s.contains(shifted.re(), shifted.im()));
    }
}

TEST_CASE("branch cut straddling fails with a certification error") {
    Ball straddle{-4, 0, make_rational(1, 10), 64};
    REQUIRE_THROWS_AS(principal_sqrt(straddle, 64), CertificationFailure);
    Ball zeroish{0, 0, make_rational(1, 10), 64};
    REQUIRE_THROWS_AS(principal_sqrt(zeroish, 64), CertificationFailure);
    // same midpoint, exact: fine
    REQUIRE(principal_sqrt(Ball::exact(-4, 0), 64).contains(0, 2));
}

TEST_CASE("monotone refinement: doubling bits never widens") {
    FieldElement w{LatticeKind::Gaussian, 2, 3};
    Rational prev_rad;
    for (unsigned bits = 32; bits <= 1024; bits *= 2) {
        Ball s = principal_sqrt_exact(w, bits);
        if (bits > 32) REQUIRE(s.radius() <= prev_rad);
        prev_rad = s.radius();
    }
}

TEST_CASE("embed_numeric contains the embedded value") {
    auto rng = make_rng(43);
    // Gaussian embeddings are exact
    FieldElement g{LatticeKind::Gaussian, make_rational(3, 7), make_rational(-2, 9)};
    Ball bg = embed_numeric(g, 64);
    REQUIRE(bg.is_exact());
    REQUIRE(bg.re() == g.x());

    // Eisenstein: exact containment decided in Q(sqrt(3))
    for (int i = 0; i < 100; ++i) {
        FieldElement e = testsupport::random_field(rng, LatticeKind::Eisenstein);
        Ball be = embed_numeric(e, 64);
        REQUIRE(be.contains_field(e));
        REQUIRE(be.radius() <= make_rational(1, Integer(1) << 55));
        // rationals embed exactly
        if (e.x() == e.y()) REQUIRE(be.is_exact());
    }
}

TEST_CASE("precision policy validation") {
    REQUIRE_THROWS_AS(PrecisionPolicy(16, 64), DomainError);
    REQUIRE_THROWS_AS(PrecisionPolicy(64, 32), DomainError);
    PrecisionPolicy p;
    REQUIRE(p.initial_bits == 64);
    REQUIRE(p.max_bits == 65536);
}
