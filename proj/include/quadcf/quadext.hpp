#pragma once

#include <string>
#include <utility>

#include "quadcf/field.hpp"
#include "quadcf/lattice.hpp"

namespace quadcf {

/**
 * Parameters (t, u) of f(X) = X^2 - tX + u with u a unit. Admissibility
 * levels gate t against the exclusion set of the matching level; the
 * unchecked constructor exists for scan tooling.
 */
class QuadParams {
public:
    static QuadParams unchecked(const LatticePoint& t, const UnitValue& u) {
        return QuadParams(t, u);
    }
    static QuadParams admissible_l2(const LatticePoint& t, const UnitValue& u) {
        require_outside(t, u, ExclusionLevel::L2);
        return QuadParams(t, u);
    }
    static QuadParams admissible_l3(const LatticePoint& t, const UnitValue& u) {
        require_outside(t, u, ExclusionLevel::L3);
        return QuadParams(t, u);
    }

    LatticeKind kind() const { return t_.kind(); }
    const LatticePoint& t() const { return t_; }
    const UnitValue& u() const { return u_; }

    bool outside(ExclusionLevel level) const {
        return !builtin_exclusion_set(kind(), level, u_).contains(t_);
    }

    bool operator==(const QuadParams& o) const {
        return t_ == o.t_ && u_.value() == o.u_.value();
    }

    std::string str() const { return "t=" + t_.str() + ", u=" + u_.value().str(); }

private:
    QuadParams(const LatticePoint& t, const UnitValue& u) : t_(t), u_(u) {
        if (t.kind() != u.kind()) throw DomainError("QuadParams kind mismatch");
    }
    static void require_outside(const LatticePoint& t, const UnitValue& u, ExclusionLevel lvl) {
        if (builtin_exclusion_set(t.kind(), lvl, u).contains(t)) {
            std::string set = (t.kind() == LatticeKind::Gaussian ? "G" : "E") +
                              std::string(lvl == ExclusionLevel::L2 ? "2" : "3");
            throw DomainError("t = " + t.str() + " lies in the exclusion set " + set + "(" +
                              u.value().str() + ")");
        }
    }

    LatticePoint t_;
    UnitValue u_;
};

/**
 * An exact element a + b*alpha of K(alpha), where alpha is the small root of
 * X^2 - tX + u (|alpha| < 1/2 for L2-admissible params). Products reduce via
 * alpha^2 = t*alpha - u; the other root is always written t - alpha.
 */
class QuadExtElement {
public:
    QuadExtElement(QuadParams params, FieldElement a, FieldElement b)
        : params_(std::move(params)), a_(std::move(a)), b_(std::move(b)) {
        if (a_.kind() != params_.kind() || b_.kind() != params_.kind())
            throw DomainError("QuadExtElement kind mismatch");
    }

    static QuadExtElement alpha(const QuadParams& p) {
        return {p, FieldElement::zero(p.kind()), FieldElement::one(p.kind())};
    }
    static QuadExtElement beta(const QuadParams& p) {
        // t - alpha
        return {p, FieldElement::from_lattice(p.t()),
                -FieldElement::one(p.kind())};
    }
    static QuadExtElement from_field(const QuadParams& p, FieldElement v) {
        return {p, std::move(v), FieldElement::zero(p.kind())};
    }

    const QuadParams& params() const { return params_; }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    LatticeKind kind() const { return params_.kind(); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_field() const { return b_.is_zero(); }

    QuadExtElement operator+(const QuadExtElement& o) const {
        check(o);
        return {params_, a_ + o.a_, b_ + o.b_};
    }
    QuadExtElement operator-(const QuadExtElement& o) const {
        check(o);
        return {params_, a_ - o.a_, b_ - o.b_};
    }
    QuadExtElement operator-() const { return {params_, -a_, -b_}; }

    QuadExtElement operator*(const QuadExtElement& o) const {
        check(o);
        // (a1 + b1 A)(a2 + b2 A), A^2 = tA - u
        FieldElement t = FieldElement::from_lattice(params_.t());
        FieldElement u = FieldElement::from_lattice(params_.u().value());
        FieldElement bb = b_ * o.b_;
        return {params_, a_ * o.a_ - bb * u, a_ * o.b_ + b_ * o.a_ + bb * t};
    }

    /// (a + b alpha)^-1 = (a + b(t - alpha)) / (a^2 + a b t + b^2 u).
    QuadExtElement inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero extension element");
        FieldElement t = FieldElement::from_lattice(params_.t());
        FieldElement u = FieldElement::from_lattice(params_.u().value());
        FieldElement n = a_ * a_ + a_ * b_ * t + b_ * b_ * u;
        if (n.is_zero())
            throw DivisionByZero("zero relative norm (reducible f cannot be inverted here)");
        FieldElement ninv = n.inverse();
        return {params_, (a_ + b_ * t) * ninv, -(b_ * ninv)};
    }
    QuadExtElement operator/(const QuadExtElement& o) const { return *this * o.inverse(); }

    bool operator==(const QuadExtElement& o) const {
        return params_ == o.params_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const QuadExtElement& o) const { return !(*this == o); }

    std::string str() const { return "(" + a_.str() + ") + (" + b_.str() + ")*alpha"; }

private:
    void check(const QuadExtElement& o) const {
        if (!(params_ == o.params_)) throw DomainError("mixed QuadExt parameters");
    }

    QuadParams params_;
    FieldElement a_, b_;
};

/// True iff f(X) = X^2 - tX + u has no root in K, i.e. the discriminant
/// t^2 - 4u is not a square in K. Exact: z^2 = d forces z real or purely
/// imaginary relative to d's polar decomposition, so reduce to rational
/// square tests on |d| and the half-angle data.
inline bool minimal_polynomial_check(const QuadParams& p) {
    FieldElement t = FieldElement::from_lattice(p.t());
    FieldElement u = FieldElement::from_lattice(p.u().value());
    FieldElement d = t * t - u.scale(4);
    if (d.is_zero()) return false;  // double root (t/2 in K after reduction of f)

    // Solve z^2 = d exactly in K. Write z = (zx, zy) in basis coords; over
    // either field, squaring gives polynomial equations with rational
    // solutions only if |d| is a rational square W^2 and the half-angle
    // components sqrt((W ± Re d)/2) fit together in K. Work with the
    // embedded form: z = p + q*s, s = i resp. sqrt(-3), p, q in Q.
    // z^2 = p^2 + e q^2 + 2pq s (e = -1 or -3), so:
    //   Re d = p^2 + e q^2,  "s-part" of d = 2 p q.
    const bool gauss = p.kind() == LatticeKind::Gaussian;
    const Rational e = gauss ? Rational(-1) : Rational(-3);
    const Rational dre = d.real_part();
    // d = dre + dsp * s with s = i or sqrt(-3)
    const Rational dsp = gauss ? d.y() : (d.x() - d.y()) / 2;

    if (dsp == 0) {
        // need p*q = 0: either z^2 = p^2 = dre, or z^2 = e q^2 = dre
        Rational root;
        if (dre > 0) return !is_rational_square(dre, &root);
        return !is_rational_square(dre / e, &root);
    }
    // p, q both nonzero: q = dsp/(2p), so Y = p^2 solves
    // Y^2 - dre*Y + e*dsp^2/4 = 0 over Q; disc = dre^2 - e*dsp^2 > 0.
    Rational disc = dre * dre - e * dsp * dsp;
    Rational sd;
    if (!is_rational_square(disc, &sd)) return true;
    for (int sgn : {1, -1}) {
        Rational Y = (dre + sgn * sd) / 2;  // candidate p^2
        Rational proot;
        if (Y > 0 && is_rational_square(Y, &proot) && proot != 0) {
            Rational q = dsp / (2 * proot);
            // verify: p^2 + e q^2 == dre
            if (proot * proot + e * q * q == dre) return false;
        }
    }
    return true;
}

}  // namespace quadcf
