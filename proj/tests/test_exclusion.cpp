#include <catch2/catch_amalgamated.hpp>

#include "quadcf/exclusion_scan.hpp"

using namespace quadcf;

TEST_CASE("recomputed Gaussian sets equal the transcription") {
    const LatticeKind G = LatticeKind::Gaussian;
    PrecisionPolicy policy;
    for (const auto& u : UnitValue::all(G)) {
        for (ExclusionLevel lvl : {ExclusionLevel::L1, ExclusionLevel::L2}) {
            ExclusionSet re = recompute_exclusion_set(G, lvl, u, policy);
            ExclusionSet builtin = builtin_exclusion_set(G, lvl, u);
            INFO("unit " << u.value().str() << " level " << level_tag(lvl));
            REQUIRE(re.same_members(builtin));
        }
    }
}

TEST_CASE("recomputed Eisenstein sets equal the transcription") {
    const LatticeKind E = LatticeKind::Eisenstein;
    PrecisionPolicy policy;
    for (const auto& u : UnitValue::all(E)) {
        for (ExclusionLevel lvl : {ExclusionLevel::L1, ExclusionLevel::L2}) {
            ExclusionSet re = recompute_exclusion_set(E, lvl, u, policy);
            ExclusionSet builtin = builtin_exclusion_set(E, lvl, u);
            INFO("unit " << u.value().str() << " level " << level_tag(lvl));
            REQUIRE(re.same_members(builtin));
        }
    }
}

TEST_CASE("L3 is defined, not recomputed") {
    UnitValue one{LatticePoint::one(LatticeKind::Gaussian)};
    REQUIRE_THROWS_AS(recompute_exclusion_set(LatticeKind::Gaussian, ExclusionLevel::L3, one, {}),
                      DomainError);
}

TEST_CASE("threshold ties are decided exactly") {
    // t = 0: |alpha| = 1 exactly — both defining inequalities fail
    const LatticeKind G = LatticeKind::Gaussian;
    for (const auto& u : UnitValue::all(G)) {
        QuadParams p = QuadParams::unchecked(LatticePoint::zero(G), u);
        REQUIRE(detail::alpha_modulus_sq_equals(p, Rational(1)));
        REQUIRE_FALSE(detail::alpha_modulus_sq_equals(p, make_rational(1, 4)));
    }
    // t = 1, u = 1: roots (1 ± i sqrt 3)/2 have |alpha|^2 = 1 exactly
    QuadParams tie = QuadParams::unchecked(LatticePoint{G, 1, 0}, UnitValue{LatticePoint{G, 1, 0}});
    REQUIRE(detail::alpha_modulus_sq_equals(tie, Rational(1)));
    // t = 3, u = 1: |alpha| = (3 - sqrt 5)/2, no tie at either threshold
    QuadParams p3 = QuadParams::unchecked(LatticePoint{G, 3, 0}, UnitValue{LatticePoint{G, 1, 0}});
    REQUIRE_FALSE(detail::alpha_modulus_sq_equals(p3, Rational(1)));
    REQUIRE_FALSE(detail::alpha_modulus_sq_equals(p3, make_rational(1, 4)));
    // t = 2, u = 1: double root at 1, |alpha|^2 = 1
    QuadParams dbl = QuadParams::unchecked(LatticePoint{G, 2, 0}, UnitValue{LatticePoint{G, 1, 0}});
    REQUIRE(detail::alpha_modulus_sq_equals(dbl, Rational(1)));
}
