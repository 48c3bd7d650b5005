#pragma once

#include <optional>
#include <utility>

#include "quadcf/ball.hpp"
#include "quadcf/quadext.hpp"

namespace quadcf {

/**
 * Certified balls for the two roots of X^2 - tX + u:
 *   alpha = (t/2)(1 - sqrt(1 - 4u/t^2)),  beta = (t/2)(1 + sqrt(1 - 4u/t^2)),
 * with the principal square root, so alpha is the (weakly) small root.
 * For t = 0 the pair is (-sqrt(-u), +sqrt(-u)).
 *
 * 1 - 4u/t^2 is computed exactly in K, so the only enclosure widths come
 * from the square root itself (and, for Eisenstein, embedding t/2).
 */
inline std::pair<Ball, Ball> roots_numeric(const QuadParams& p, unsigned bits) {
    const LatticeKind k = p.kind();
    FieldElement u = FieldElement::from_lattice(p.u().value());
    if (p.t().is_zero()) {
        Ball s = principal_sqrt_exact(-u, bits);
        return {-s, s};
    }
    FieldElement t = FieldElement::from_lattice(p.t());
    FieldElement w = FieldElement::one(k) - (u.scale(4) / (t * t));
    Ball sw = principal_sqrt_exact(w, bits);
    Ball th = embed_numeric(t.scale(Rational(1, 2)), bits);
    Ball one = Ball::exact(1, 0, bits);
    return {th * (one - sw), th * (one + sw)};
}

inline std::pair<Ball, Ball> roots_numeric(const QuadParams& p, const PrecisionPolicy& policy) {
    return roots_numeric(p, policy.initial_bits);
}

/// Ball for a + b*alpha at the given precision. Midpoint arithmetic is
/// exact; the radius is |b| * radius(alpha) plus embedding slop.
inline Ball eval_ext(const QuadExtElement& z, unsigned bits) {
    Ball a = embed_numeric(z.a(), bits);
    if (z.is_field()) return a;
    Ball b = embed_numeric(z.b(), bits);
    Ball alpha = roots_numeric(z.params(), bits).first;
    return a + b * alpha;
}

inline Ball eval_ext(const QuadExtElement& z, const PrecisionPolicy& policy) {
    return eval_ext(z, policy.initial_bits);
}

namespace detail {

// Gaussian cell certification: every point of the ball rounds to the same
// integer pair under [x+1/2]. Exact rational floor comparisons.
inline std::optional<LatticePoint> try_round_gaussian(const Ball& z) {
    const Rational& r = z.radius();
    Integer xlo = round_half_up(z.re() - r), xhi = round_half_up(z.re() + r);
    Integer ylo = round_half_up(z.im() - r), yhi = round_half_up(z.im() + r);
    if (xlo != xhi || ylo != yhi) return std::nullopt;
    return LatticePoint{LatticeKind::Gaussian, xlo, yhi};
}

// Squared distance from the ball midpoint to the embedded lattice point
// (m, n): an exact A + B*sqrt(3) pair.
struct DistSq3 {
    Rational a, b;  // value = a + b sqrt(3)
    RatInterval enclose(const RatInterval& s3) const {
        RatInterval bi = s3 * b;
        return {a + bi.lo, a + bi.hi};
    }
};

inline DistSq3 eis_dist_sq(const Ball& z, const LatticePoint& p) {
    // embed(p) = (px+py)/2 + (px-py)/2 * sqrt(3) i
    Rational re = make_rational(p.x() + p.y(), 2);
    Rational c = make_rational(p.x() - p.y(), 2);
    Rational dx = z.re() - re;
    // (im - c sqrt 3)^2 = im^2 + 3c^2 - 2 c im sqrt 3
    return {dx * dx + z.im() * z.im() + 3 * c * c, -2 * c * z.im()};
}

inline int cmp_dist(const DistSq3& u, const DistSq3& v) {
    return sign_a_plus_b_sqrt(u.a - v.a, u.b - v.b, 3);
}

// Eisenstein certification: nearest lattice point to the midpoint must beat
// every neighbour by more than 2*radius for the whole ball to agree.
inline std::optional<LatticePoint> try_round_eisenstein(const Ball& z, unsigned bits) {
    const LatticeKind k = LatticeKind::Eisenstein;
    RatInterval s3 = sqrt_interval(Rational(3), bits);
    // coordinate window: x = Re + Im/sqrt(3), y = Re - Im/sqrt(3)
    RatInterval imc = RatInterval{z.im() - z.radius(), z.im() + z.radius()} * inv_interval(s3);
    Rational re_lo = z.re() - z.radius(), re_hi = z.re() + z.radius();
    Integer x_lo = floor_rat(re_lo + imc.lo) - 1, x_hi = ceil_rat(re_hi + imc.hi) + 1;
    Integer y_lo = floor_rat(re_lo - imc.hi) - 1, y_hi = ceil_rat(re_hi - imc.lo) + 1;

    std::optional<LatticePoint> best;
    DistSq3 best_d{0, 0};
    std::optional<DistSq3> second_d;
    for (Integer x = x_lo; x <= x_hi; ++x) {
        for (Integer y = y_lo; y <= y_hi; ++y) {
            LatticePoint cand{k, x, y};
            DistSq3 d = eis_dist_sq(z, cand);
            if (!best) {
                best = cand;
                best_d = d;
            } else {
                int c = cmp_dist(d, best_d);
                if (c < 0) {
                    second_d = best_d;
                    best = cand;
                    best_d = d;
                } else if (!second_d || cmp_dist(d, *second_d) < 0) {
                    second_d = d;
                }
            }
        }
    }
    if (!best) return std::nullopt;
    if (second_d) {
        // certify dist(v)^2 > (dist(best) + 2r)^2 for the runner-up
        RatInterval db = best_d.enclose(s3);
        RatInterval dv = second_d->enclose(s3);
        Rational dbs = sqrt_interval(db.hi < 0 ? Rational(0) : db.hi, bits).hi;
        Rational r2 = 2 * z.radius();
        if (!(dv.lo > db.hi + 2 * r2 * dbs + r2 * r2)) return std::nullopt;
    }
    return best;
}

}  // namespace detail

/// Certified nearest-lattice rounding of a ball (kind chooses the rule).
/// Returns nullopt when the ball cannot be separated from a cell boundary
/// at its current radius — the caller refines.
inline std::optional<LatticePoint> try_certified_round(const Ball& z, LatticeKind kind,
                                                       unsigned bits) {
    if (kind == LatticeKind::Gaussian) return detail::try_round_gaussian(z);
    return detail::try_round_eisenstein(z, bits);
}

/// Throwing form for callers without their own refinement loop.
inline LatticePoint certified_round(const Ball& z, LatticeKind kind, unsigned bits) {
    if (auto p = try_certified_round(z, kind, bits)) return *p;
    throw CertificationFailure("certified_round: ball straddles a rounding boundary");
}

/// z - [z] for ball inputs; the rounding must certify at the given bits.
inline Ball fractional_part(const Ball& z, LatticeKind kind, unsigned bits) {
    LatticePoint a = certified_round(z, kind, bits);
    return z - embed_numeric(a, bits);
}

/// Certified rounding of an extension element. Exact (b = 0) values
/// short-circuit to the exact rule; otherwise refine to policy limits.
inline LatticePoint certified_round(const QuadExtElement& z, const PrecisionPolicy& policy) {
    if (z.is_field()) return round_nearest(z.a());
    for (unsigned bits = policy.initial_bits;; bits *= 2) {
        Ball b = eval_ext(z, bits);
        if (auto p = try_certified_round(b, z.kind(), bits)) return *p;
        if (bits >= policy.max_bits) break;
    }
    throw CertificationFailure("certified_round: ambiguous at max precision for " + z.str());
}

inline LatticePoint certified_round(const FieldElement& z, const PrecisionPolicy&) {
    return round_nearest(z);
}

}  // namespace quadcf
