#include <catch2/catch_amalgamated.hpp>

#include "quadcf/exclusion_scan.hpp"
#include "quadcf/quadext.hpp"
#include "quadcf/roots.hpp"
#include "test_support.hpp"

using namespace quadcf;
using testsupport::make_rng;

namespace {

QuadParams gauss_params(long tx, long ty, long ux, long uy) {
    const LatticeKind G = LatticeKind::Gaussian;
    return QuadParams::unchecked(LatticePoint{G, tx, ty}, UnitValue{LatticePoint{G, ux, uy}});
}

}  // namespace

TEST_CASE("admissibility constructors gate against exclusion sets") {
    const LatticeKind G = LatticeKind::Gaussian;
    UnitValue one{LatticePoint{G, 1, 0}};
    REQUIRE_NOTHROW(QuadParams::admissible_l2(LatticePoint{G, 3, 0}, one));
    REQUIRE_THROWS_AS(QuadParams::admissible_l2(LatticePoint{G, 1, 1}, one), DomainError);
    // 2i is L2-admissible for u = 1 but sits in G_3
    REQUIRE_NOTHROW(QuadParams::admissible_l2(LatticePoint{G, 0, 2}, one));
    REQUIRE_THROWS_AS(QuadParams::admissible_l3(LatticePoint{G, 0, 2}, one), DomainError);
}

TEST_CASE("extension arithmetic: roots of f") {
    QuadParams p = gauss_params(3, 0, 1, 0);
    QuadExtElement alpha = QuadExtElement::alpha(p);
    QuadExtElement beta = QuadExtElement::beta(p);
    FieldElement t = FieldElement::from_lattice(p.t());
    FieldElement u = FieldElement::from_lattice(p.u().value());

    // alpha * (t - alpha) = u and alpha + (t - alpha) = t
    REQUIRE(alpha * beta == QuadExtElement::from_field(p, u));
    REQUIRE(alpha + beta == QuadExtElement::from_field(p, t));

    // inv(alpha) = (t - alpha)/u: verify alpha * inv(alpha) = 1 exactly
    QuadExtElement inv = alpha.inverse();
    REQUIRE(alpha * inv == QuadExtElement::from_field(p, FieldElement::one(p.kind())));
    // and the closed form: a = t u^{-1}, b = -u^{-1}
    FieldElement uinv = u.inverse();
    REQUIRE(inv == QuadExtElement(p, t * uinv, -uinv));
}

TEST_CASE("extension inversion on random elements") {
    auto rng = make_rng(50);
    for (LatticeKind k : {LatticeKind::Gaussian, LatticeKind::Eisenstein}) {
        QuadParams p = k == LatticeKind::Gaussian
                           ? gauss_params(3, 0, 1, 0)
                           : QuadParams::unchecked(
                                 LatticePoint{k, 3, 3},
                                 UnitValue{LatticePoint::one(k)});
        const QuadExtElement one = QuadExtElement::from_field(p, FieldElement::one(k));
        for (int i = 0; i < 60; ++i) {
            QuadExtElement z{p, testsupport::random_field(rng, k),
                             testsupport::random_field(rng, k)};
            if (z.is_zero()) continue;
            REQUIRE(z * z.inverse() == one);
            QuadExtElement w{p, testsupport::random_field(rng, k),
                             testsupport::random_field(rng, k)};
            REQUIRE(z * w == w * z);
            REQUIRE((z + w) - w == z);
        }
        REQUIRE_THROWS_AS(QuadExtElement::from_field(p, FieldElement::zero(k)).inverse(),
                          DivisionByZero);
    }
}

TEST_CASE("minimal polynomial check") {
    // discriminant 5 is not a Gaussian-rational square: oracle is the exact
    // integer square test on numerator/denominator of ±5
    REQUIRE_FALSE(is_rational_square(Rational(5)));
    REQUIRE_FALSE(is_rational_square(Rational(-5)));
    REQUIRE(minimal_polynomial_check(gauss_params(3, 0, 1, 0)));

    // f = (X-1)^2 for t = 2, u = 1
    REQUIRE_FALSE(minimal_polynomial_check(gauss_params(2, 0, 1, 0)));

    // t = 1+i, u = i: disc = -2i = (1-i)^2, roots 1 and i in K_G
    FieldElement onemi{LatticeKind::Gaussian, 1, -1};
    REQUIRE(onemi * onemi == FieldElement(LatticeKind::Gaussian, 0, -2));
    REQUIRE_FALSE(minimal_polynomial_check(gauss_params(1, 1, 0, 1)));

    // every L2-admissible parameter in a small box is irreducible
    for (LatticeKind k : {LatticeKind::Gaussian, LatticeKind::Eisenstein}) {
        for (const auto& u : UnitValue::all(k)) {
            auto excl = builtin_exclusion_set(k, ExclusionLevel::L2, u);
            for (long x = -3; x <= 3; ++x)
                for (long y = -3; y <= 3; ++y) {
                    LatticePoint t{k, x, y};
                    if (excl.contains(t)) continue;
                    REQUIRE(minimal_polynomial_check(QuadParams::unchecked(t, u)));
                }
        }
    }
}

TEST_CASE("roots_numeric: Lucas parameters") {
    QuadParams p = gauss_params(3, 0, 1, 0);
    auto [alpha, beta] = roots_numeric(p, 96);

    // alpha = (3 - sqrt 5)/2, beta = (3 + sqrt 5)/2: independent enclosure
    RatInterval s5 = sqrt_interval(Rational(5), 128);
    REQUIRE(alpha.contains((3 - s5.hi) / 2, 0));
    REQUIRE(beta.contains((3 + s5.lo) / 2, 0));

    // paper's decimal anchor 0.38196601125...
    Rational anchor = make_rational(38196601125, Integer("100000000000"));
    REQUIRE(abs(alpha.re() - anchor) < make_rational(1, 1000000000));

    // alpha + beta contains t, alpha * beta contains u
    Ball sum = alpha + beta;
    REQUIRE(sum.contains(3, 0));
    Ball prod = alpha * beta;
    REQUIRE(prod.contains(1, 0));
}

TEST_CASE("roots_numeric: certified small root for t = 2+2i") {
    QuadParams p = gauss_params(2, 2, 1, 0);
    auto [alpha, beta] = roots_numeric(p, 64);
    REQUIRE(alpha.abs_upper(64) < make_rational(1, 2));
    Ball beta_minus_t = beta - Ball::exact(2, 2);
    REQUIRE(beta_minus_t.abs_upper(64) < make_rational(1, 2));
}

TEST_CASE("roots_numeric: t = 0 falls back to the square root pair") {
    QuadParams p = gauss_params(0, 0, -1, 0);
    auto [alpha, beta] = roots_numeric(p, 64);  // X^2 - 1: roots ±1
    REQUIRE(alpha.contains(-1, 0));
    REQUIRE(beta.contains(1, 0));
}

TEST_CASE("root sum/product containment over random admissible params") {
    for (LatticeKind k : {LatticeKind::Gaussian, LatticeKind::Eisenstein}) {
        auto rng = make_rng(51);
        auto units = UnitValue::all(k);
        std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
        int done = 0;
        while (done < 100) {
            LatticePoint t = testsupport::random_lattice(rng, k, 6);
            const UnitValue& u = units[pick(rng)];
            if (builtin_exclusion_set(k, ExclusionLevel::L2, u).contains(t)) continue;
            QuadParams p = QuadParams::unchecked(t, u);
            auto [alpha, beta] = roots_numeric(p, 64);
            REQUIRE((alpha + beta).contains_field(FieldElement::from_lattice(t)));
            REQUIRE((alpha * beta).contains_field(FieldElement::from_lattice(u.value())));
            ++done;
        }
    }
}

TEST_CASE("eval_ext") {
    QuadParams p = gauss_params(3, 0, 1, 0);
    // z = alpha
    Ball a = eval_ext(QuadExtElement::alpha(p), 80);
    RatInterval s5 = sqrt_interval(Rational(5), 120);
    REQUIRE(a.contains((3 - s5.hi) / 2, 0));
    // z = 1 exactly
    Ball one = eval_ext(QuadExtElement::from_field(p, FieldElement::one(p.kind())), 64);
    REQUIRE(one.is_exact());
    REQUIRE(one.re() == 1);
    // z = t - alpha = beta
    Ball b = eval_ext(QuadExtElement::beta(p), 80);
    REQUIRE(b.contains((3 + s5.lo) / 2, 0));
}

TEST_CASE("certified rounding of extension elements") {
    // [alpha]_G = 0 and [beta]_G = t over admissible parameters
    PrecisionPolicy policy;
    QuadParams p1 = gauss_params(3, 0, 1, 0);
    REQUIRE(certified_round(QuadExtElement::alpha(p1), policy) ==
            LatticePoint::zero(LatticeKind::Gaussian));
    QuadParams p2 = gauss_params(2, 2, 1, 0);
    REQUIRE(certified_round(QuadExtElement::beta(p2), policy) ==
            LatticePoint{LatticeKind::Gaussian, 2, 2});
    // exact rational 1/2 short-circuits to the half-open rule
    QuadExtElement half = QuadExtElement::from_field(
        p1, FieldElement{LatticeKind::Gaussian, make_rational(1, 2), 0});
    REQUIRE(certified_round(half, policy) == LatticePoint{LatticeKind::Gaussian, 1, 0});
}

TEST_CASE("ball rounding and fractional part") {
    // a fat ball well inside a cell rounds; its fractional part recenters
    Ball z{make_rational(21, 10), make_rational(-29, 10), make_rational(1, 50), 64};
    REQUIRE(certified_round(z, LatticeKind::Gaussian, 64) ==
            LatticePoint{LatticeKind::Gaussian, 2, -3});
    Ball frac = fractional_part(z, LatticeKind::Gaussian, 64);
    REQUIRE(frac.contains(make_rational(1, 10), make_rational(1, 10)));
    // straddling a cell edge cannot certify
    Ball edge{make_rational(1, 2), Rational(0), make_rational(1, 100), 64};
    REQUIRE_THROWS_AS(certified_round(edge, LatticeKind::Gaussian, 64), CertificationFailure);
    // Eisenstein: ball around b/3 rounds to 0
    Ball e = embed_numeric(FieldElement{LatticeKind::Eisenstein, make_rational(1, 3), 0}, 64);
    Ball fat{e.re(), e.im(), make_rational(1, 100), 64};
    REQUIRE(certified_round(fat, LatticeKind::Eisenstein, 64) ==
            LatticePoint::zero(LatticeKind::Eisenstein));
}

TEST_CASE("exact rounding-boundary values fail certification") {
    // t = 2i, u = 1: alpha = i(1 - sqrt 2) has Re = 0, so 1/2 + alpha sits
    // exactly on the Gaussian cell boundary Re = 1/2 and can never separate
    PrecisionPolicy small{32, 128};
    QuadParams p = gauss_params(0, 2, 1, 0);
    QuadExtElement z = QuadExtElement(
        p, FieldElement{LatticeKind::Gaussian, make_rational(1, 2), 0},
        FieldElement::one(LatticeKind::Gaussian));
    REQUIRE_THROWS_AS(certified_round(z, small), CertificationFailure);
    // the ball form reports the same
    REQUIRE_THROWS_AS(certified_round(eval_ext(z, 64), LatticeKind::Gaussian, 64),
                      CertificationFailure);
}

TEST_CASE("certified rounding over Eisenstein parameters") {
    PrecisionPolicy policy;
    const LatticeKind E = LatticeKind::Eisenstein;
    QuadParams p = QuadParams::unchecked(LatticePoint{E, 3, 3}, UnitValue{LatticePoint::one(E)});
    REQUIRE(certified_round(QuadExtElement::alpha(p), policy) == LatticePoint::zero(E));
    REQUIRE(certified_round(QuadExtElement::beta(p), policy) == LatticePoint{E, 3, 3});
}
