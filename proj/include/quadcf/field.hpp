#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadcf/lattice.hpp"
#include "quadcf/numbers.hpp"

namespace quadcf {

/**
 * An exact element of K_G = Q(i) or K_E = Q(sqrt(-3)), stored as a pair of
 * rationals over the same basis as LatticePoint. All operations are exact;
 * inversion goes through the norm form.
 */
class FieldElement {
public:
    FieldElement(LatticeKind kind, Rational x, Rational y)
        : kind_(kind), x_(std::move(x)), y_(std::move(y)) {}

    static FieldElement zero(LatticeKind k) { return {k, 0, 0}; }
    static FieldElement one(LatticeKind k) {
        return k == LatticeKind::Gaussian ? FieldElement{k, 1, 0} : FieldElement{k, 1, 1};
    }
    static FieldElement from_lattice(const LatticePoint& p) {
        return {p.kind(), Rational(p.x()), Rational(p.y())};
    }
    static FieldElement from_rational(LatticeKind k, const Rational& q) {
        return k == LatticeKind::Gaussian ? FieldElement{k, q, 0} : FieldElement{k, q, q};
    }

    LatticeKind kind() const { return kind_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_lattice() const { return is_integer(x_) && is_integer(y_); }
    LatticePoint to_lattice() const {
        if (!is_lattice()) throw DomainError("not a lattice point: " + str());
        return {kind_, num(x_), num(y_)};
    }
    // rational elements are multiples of 1 = (1,0) resp. (1,1)
    bool is_rational() const { return kind_ == LatticeKind::Gaussian ? y_ == 0 : x_ == y_; }
    Rational rational_value() const {
        if (!is_rational()) throw DomainError("not rational: " + str());
        return kind_ == LatticeKind::Gaussian ? x_ : x_;
    }

    FieldElement operator+(const FieldElement& o) const {
        check_kind(o);
        return {kind_, x_ + o.x_, y_ + o.y_};
    }
    FieldElement operator-(const FieldElement& o) const {
        check_kind(o);
        return {kind_, x_ - o.x_, y_ - o.y_};
    }
    FieldElement operator-() const { return {kind_, -x_, -y_}; }

    FieldElement operator*(const FieldElement& o) const {
        check_kind(o);
        if (kind_ == LatticeKind::Gaussian)
            return {kind_, x_ * o.x_ - y_ * o.y_, x_ * o.y_ + y_ * o.x_};
        Rational c = x_ * o.y_ + y_ * o.x_ - x_ * o.x_ - y_ * o.y_;
        return {kind_, x_ * o.x_ + c, y_ * o.y_ + c};
    }

    FieldElement scale(const Rational& c) const { return {kind_, x_ * c, y_ * c}; }

    FieldElement conj() const {
        if (kind_ == LatticeKind::Gaussian) return {kind_, x_, -y_};
        return {kind_, y_, x_};
    }

    // |z|^2 as an exact rational
    Rational norm() const {
        if (kind_ == LatticeKind::Gaussian) return x_ * x_ + y_ * y_;
        return x_ * x_ - x_ * y_ + y_ * y_;
    }

    FieldElement inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero field element");
        Rational n = norm();
        FieldElement c = conj();
        return {kind_, c.x_ / n, c.y_ / n};
    }
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    bool operator==(const FieldElement& o) const {
        return kind_ == o.kind_ && x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // exact real part of the embedded complex value
    Rational real_part() const {
        if (kind_ == LatticeKind::Gaussian) return x_;
        return (x_ + y_) / 2;
    }
    // Gaussian: Im; Eisenstein: Im = im_coeff * sqrt(3)
    Rational im_coeff() const {
        if (kind_ == LatticeKind::Gaussian) return y_;
        return (x_ - y_) / 2;
    }
    int im_sign() const { return sign(im_coeff()); }
    // exact Im^2 = |z|^2 - Re^2
    Rational im_sq() const {
        Rational re = real_part();
        return norm() - re * re;
    }

    std::string str() const {
        return "(" + rational_string(x_) + ", " + rational_string(y_) + ")" +
               (kind_ == LatticeKind::Gaussian ? "G" : "E");
    }

private:
    void check_kind(const FieldElement& o) const {
        if (kind_ != o.kind_) throw DomainError("mixed field kinds");
    }

    LatticeKind kind_;
    Rational x_, y_;
};

/**
 * Nearest lattice point to an exact field element.
 *
 * Gaussian: [x+1/2] + [y+1/2] i — the half-open cell rule, ties upward.
 * Eisenstein: minimizes the exact norm-form distance; Voronoi boundary ties
 * go to the candidate whose embedded value is lexicographically smallest in
 * (Re, Im). (Repo convention for the hexagon boundary.)
 */
inline LatticePoint round_nearest(const FieldElement& z) {
    if (z.kind() == LatticeKind::Gaussian)
        return {z.kind(), round_half_up(z.x()), round_half_up(z.y())};

    Integer bx = floor_rat(z.x()), by = floor_rat(z.y());
    std::optional<LatticePoint> best;
    Rational best_d;
    for (long dx = -1; dx <= 2; ++dx) {
        for (long dy = -1; dy <= 2; ++dy) {
            LatticePoint cand{z.kind(), bx + dx, by + dy};
            Rational px = z.x() - cand.x(), py = z.y() - cand.y();
            Rational d = px * px - px * py + py * py;
            if (!best || d < best_d) {
                best = cand;
                best_d = d;
            } else if (d == best_d) {
                // lexicographic (Re, Im) of the embedded value:
                // Re = (x+y)/2, Im = (x-y) * sqrt(3)/2
                Integer re_c = cand.x() + cand.y(), re_b = best->x() + best->y();
                Integer im_c = cand.x() - cand.y(), im_b = best->x() - best->y();
                if (re_c < re_b || (re_c == re_b && im_c < im_b)) best = cand;
            }
        }
    }
    return *best;
}

/// z - round_nearest(z), exact; Gaussian result lies in [-1/2,1/2)^2.
inline FieldElement fractional_part(const FieldElement& z) {
    return z - FieldElement::from_lattice(round_nearest(z));
}

}  // namespace quadcf
