#pragma once

#include <utility>
#include <vector>

#include "quadcf/roots.hpp"

namespace quadcf {

namespace detail {

// Exact test |alpha(t,u)|^2 == c, decided in the real quadratic field
// Q(sqrt(norm(w))). Used when a ball comparison lands on the threshold:
// with W = |w|, S = Re sqrt(w) = sqrt((W + Re w)/2) and N = |t|^2,
//   |alpha|^2 = (N/4)(1 + W - 2S),
// so |alpha|^2 = c  iff  (N/4)(1+W) - c = (N/2) S, i.e. the left side is
// nonnegative and its square equals (N^2/8)(Re w) + (N^2/8) W.
inline bool alpha_modulus_sq_equals(const QuadParams& p, const Rational& c) {
    if (p.t().is_zero()) return c == 1;  // |alpha| = |sqrt(-u)| = 1
    FieldElement t = FieldElement::from_lattice(p.t());
    FieldElement u = FieldElement::from_lattice(p.u().value());
    FieldElement w = FieldElement::one(p.kind()) - (u.scale(4) / (t * t));
    Rational N(p.t().norm());
    if (w.is_zero()) return N / 4 == c;  // double root t/2
    Rational q1 = w.norm(), Rw = w.real_part();
    Rational A = N / 4 - c, B = N / 4;
    if (sign_a_plus_b_sqrt(A, B, q1) < 0) return false;
    Rational A2 = A * A + B * B * q1 - N * N / 8 * Rw;
    Rational B2 = 2 * A * B - N * N / 8;
    return sign_a_plus_b_sqrt(A2, B2, q1) == 0;
}

// Does |alpha|^2 >= c hold? (c is 1 for L1, 1/4 for L2.) Certified by the
// alpha ball, falling back to the exact tie test on threshold contact.
inline bool alpha_modulus_sq_at_least(const QuadParams& p, const Rational& c,
                                      const PrecisionPolicy& policy) {
    for (unsigned bits = policy.initial_bits;; bits *= 2) {
        Ball alpha = roots_numeric(p, bits).first;
        Rational hi = alpha.abs_upper(bits);
        Rational lo = alpha.abs_lower(bits);
        if (hi * hi < c) return false;
        if (lo * lo > c) return true;
        if (alpha_modulus_sq_equals(p, c)) return true;
        if (bits >= policy.max_bits)
            throw CertificationFailure("exclusion scan: |alpha| vs threshold undecided for " +
                                       p.str());
    }
}

}  // namespace detail

/**
 * Recomputes G_1/G_2 (resp. E_1/E_2) for one unit by scanning the kind's
 * box and testing the defining inequality with certified root moduli:
 * L1 includes t iff |alpha| < 1 < |beta| fails (with |alpha||beta| = 1 this
 * is |alpha| >= 1); L2 includes t iff |alpha| < 1/2 fails. Points outside
 * the box have |alpha| < 1/2 by the large-|t| tail estimate and are not
 * tested. Threshold ties are decided exactly.
 */
inline ExclusionSet recompute_exclusion_set(LatticeKind kind, ExclusionLevel level,
                                            const UnitValue& unit,
                                            const PrecisionPolicy& policy = {}) {
    if (level == ExclusionLevel::L3)
        throw DomainError("recompute_exclusion_set: L3 is defined, not computed");
    const long box = kind == LatticeKind::Gaussian ? 2 : 3;
    const Rational c = level == ExclusionLevel::L1 ? Rational(1) : Rational(1, 4);

    std::vector<LatticePoint> members;
    for (long x = -box; x <= box; ++x) {
        for (long y = -box; y <= box; ++y) {
            LatticePoint t{kind, x, y};
            QuadParams p = QuadParams::unchecked(t, unit);
            if (detail::alpha_modulus_sq_at_least(p, c, policy)) members.push_back(t);
        }
    }
    ExclusionSet set{kind, level, unit, std::move(members)};
    set.normalize();
    return set;
}

}  // namespace quadcf
