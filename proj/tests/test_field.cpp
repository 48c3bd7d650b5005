#include <catch2/catch_amalgamated.hpp>

#include "quadcf/field.hpp"
#include "test_support.hpp"

using namespace quadcf;
using testsupport::make_rng;
using testsupport::random_field;
using testsupport::random_nonzero_field;

TEST_CASE("field axioms and exact inversion on random elements") {
    for (LatticeKind k : {LatticeKind::Gaussian, LatticeKind::Eisenstein}) {
        auto rng = make_rng(30);
        const FieldElement one = FieldElement::one(k);
        for (int i = 0; i < 100; ++i) {
            FieldElement a = random_field(rng, k), b = random_field(rng, k),
                         c = random_field(rng, k);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            FieldElement x = random_nonzero_field(rng, k);
            REQUIRE(x * x.inverse() == one);
            REQUIRE(a / x * x == a);
        }
        REQUIRE_THROWS_AS(FieldElement::zero(k).inverse(), DivisionByZero);
    }
}

TEST_CASE("conjugation is an involution and multiplicative") {
    for (LatticeKind k : {LatticeKind::Gaussian, LatticeKind::Eisenstein}) {
        auto rng = make_rng(31);
        for (int i = 0; i < 100; ++i) {
            FieldElement a = random_field(rng, k), b = random_field(rng, k);
            REQUIRE(a.conj().conj() == a);
            REQUIRE((a * b).conj() == a.conj() * b.conj());
            // |z|^2 = z * conj(z), real
            FieldElement nz = a * a.conj();
            REQUIRE(nz.is_rational());
            REQUIRE(nz.rational_value() == a.norm());
        }
    }
}

TEST_CASE("basis constants") {
    const LatticeKind G = LatticeKind::Gaussian;
    FieldElement i{G, 0, 1};
    REQUIRE(i * i == FieldElement(G, -1, 0));  // i^2 = -1

    const LatticeKind E = LatticeKind::Eisenstein;
    FieldElement b{E, 1, 0}, bbar{E, 0, 1};
    REQUIRE(b * bbar == FieldElement::one(E));  // |b|^2 = 1
    FieldElement p = FieldElement::one(E);
    for (int j = 0; j < 6; ++j) p = p * b;
    REQUIRE(p == FieldElement::one(E));  // b^6 = 1
}

TEST_CASE("embedded parts are exact") {
    FieldElement z{LatticeKind::Eisenstein, make_rational(1, 3), make_rational(-1, 5)};
    // Re = (x+y)/2, Im^2 = norm - Re^2
    REQUIRE(z.real_part() == make_rational(1, 15));
    REQUIRE(z.im_sq() == z.norm() - z.real_part() * z.real_part());
    REQUIRE(z.im_sign() == 1);  // x > y
    FieldElement g{LatticeKind::Gaussian, make_rational(2, 7), make_rational(-3, 4)};
    REQUIRE(g.real_part() == make_rational(2, 7));
    REQUIRE(g.im_coeff() == make_rational(-3, 4));
}

TEST_CASE("Gaussian rounding: half-open cell rule") {
    const LatticeKind G = LatticeKind::Gaussian;
    // interior of the cell around 0
    FieldElement z{G, make_rational(2, 5), make_rational(2, 5)};
    REQUIRE(round_nearest(z) == LatticePoint{G, 0, 0});
    // boundary 1/2 + i/2 is forced to 1 + i
    FieldElement w{G, make_rational(1, 2), make_rational(1, 2)};
    REQUIRE(round_nearest(w) == LatticePoint{G, 1, 1});
    // fractional parts
    REQUIRE(fractional_part(FieldElement{G, make_rational(3, 4), 0}) ==
            FieldElement(G, make_rational(-1, 4), 0));
    REQUIRE(fractional_part(FieldElement::zero(G)) == FieldElement::zero(G));
}

TEST_CASE("Eisenstein rounding: exact nearest point") {
    const LatticeKind E = LatticeKind::Eisenstein;
    // z = 1 is itself the lattice point (1,1)
    REQUIRE(round_nearest(FieldElement::one(E)) == LatticePoint{E, 1, 1});

    // z = b/3: |b/3| = 1/3 is inside the Voronoi cell of 0. Oracle: brute
    // force the squared distance to every lattice point in a 2-shell.
    FieldElement z{E, make_rational(1, 3), 0};
    Rational d0 = z.norm();
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y) {
            if (x == 0 && y == 0) continue;
            FieldElement diff = z - FieldElement::from_lattice(LatticePoint{E, x, y});
            REQUIRE(diff.norm() > d0);
        }
    REQUIRE(round_nearest(z) == LatticePoint{E, 0, 0});
    REQUIRE(fractional_part(z) == z);
}

TEST_CASE("Eisenstein rounding: boundary ties use the (Re, Im) rule") {
    const LatticeKind E = LatticeKind::Eisenstein;
    // 1/2 is equidistant from 0 and 1 (and from b and conj(b) it is farther:
    // |1/2 - b|^2 = 3/4). Tie between (0,0) and (1,1): Re 0 < Re 1.
    FieldElement half = FieldElement::from_rational(E, make_rational(1, 2));
    LatticePoint r = round_nearest(half);
    REQUIRE(r == LatticePoint{E, 0, 0});

    // the centroid-direction tie z = b/2 + conj(b)/2 ... use the deep vertex:
    // z at the hexagon vertex (1/3)(1 + b) is equidistant from 0, 1, b.
    FieldElement vertex =
        (FieldElement::one(E) + FieldElement{E, 1, 0}).scale(make_rational(1, 3));
    Rational dz = vertex.norm();
    REQUIRE((vertex - FieldElement::one(E)).norm() == dz);
    REQUIRE((vertex - FieldElement{E, 1, 0}).norm() == dz);
    // candidates 0=(0,0), 1=(1,1), b=(1,0): embedded Re are 0, 1, 1/2 -> pick 0
    REQUIRE(round_nearest(vertex) == LatticePoint{E, 0, 0});
}

TEST_CASE("round/fractional reconstruction on random elements") {
    for (LatticeKind k : {LatticeKind::Gaussian, LatticeKind::Eisenstein}) {
        auto rng = make_rng(32);
        for (int i = 0; i < 200; ++i) {
            FieldElement z = random_field(rng, k);
            LatticePoint a = round_nearest(z);
            FieldElement frac = fractional_part(z);
            REQUIRE(FieldElement::from_lattice(a) + frac == z);
            if (k == LatticeKind::Gaussian) {
                REQUIRE(frac.x() >= make_rational(-1, 2));
                REQUIRE(frac.x() < make_rational(1, 2));
                REQUIRE(frac.y() >= make_rational(-1, 2));
                REQUIRE(frac.y() < make_rational(1, 2));
            } else {
                // inside or on the Voronoi cell: no strictly nearer point
                for (long dx = -2; dx <= 2; ++dx)
                    for (long dy = -2; dy <= 2; ++dy) {
                        LatticePoint q = a + LatticePoint{k, dx, dy};
                        FieldElement diff = z - FieldElement::from_lattice(q);
                        REQUIRE(diff.norm() >= frac.norm());
                    }
            }
        }
    }
}
