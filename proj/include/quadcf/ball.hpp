#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "quadcf/field.hpp"
#include "quadcf/numbers.hpp"

namespace quadcf {

/// Working-precision schedule for certified computations: start at
/// initial_bits, double on demand, give up past max_bits.
struct PrecisionPolicy {
    unsigned initial_bits = 64;
    unsigned max_bits = 65536;

    PrecisionPolicy() = default;
    PrecisionPolicy(unsigned init, unsigned max) : initial_bits(init), max_bits(max) {
        if (initial_bits < 32) throw DomainError("precision policy: initial_bits < 32");
        if (max_bits < initial_bits) throw DomainError("precision policy: max < initial");
    }
};

/**
 * Complex ball: exact rational midpoint plus one shared radius covering the
 * complex distance to the true value. Midpoint arithmetic is exact, so radii
 * only ever come from square-root enclosures and their propagation. `bits`
 * records the working precision that produced the ball.
 */
class Ball {
public:
    Ball(Rational re, Rational im, Rational radius, unsigned bits)
        : re_(std::move(re)), im_(std::move(im)), rad_(std::move(radius)), bits_(bits) {
        if (rad_ < 0) throw DomainError("negative ball radius");
    }
    static Ball exact(Rational re, Rational im, unsigned bits = 0) {
        return {std::move(re), std::move(im), 0, bits};
    }
    static Ball zero() { return exact(0, 0); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& radius() const { return rad_; }
    unsigned bits() const { return bits_; }
    bool is_exact() const { return rad_ == 0; }

    Ball operator+(const Ball& o) const {
        return {re_ + o.re_, im_ + o.im_, rad_ + o.rad_, std::min(bits_, o.bits_)};
    }
    Ball operator-(const Ball& o) const {
        return {re_ - o.re_, im_ - o.im_, rad_ + o.rad_, std::min(bits_, o.bits_)};
    }
    Ball operator-() const { return {-re_, -im_, rad_, bits_}; }
    Ball conj() const { return {re_, -im_, rad_, bits_}; }

    // |mid|^2, exact
    Rational mid_norm() const { return re_ * re_ + im_ * im_; }

    // cheap exact bound |mid| <= |re| + |im| (within sqrt(2) of tight)
    Rational mid_abs_cheap_upper() const { return quadcf::abs(re_) + quadcf::abs(im_); }

    // certified |mid| enclosure at this ball's recorded precision
    RatInterval mid_abs(unsigned bits) const { return sqrt_interval(mid_norm(), bits); }

    // upper bound on |z| over the ball
    Rational abs_upper(unsigned bits) const { return mid_abs(bits).hi + rad_; }
    // lower bound on |z| over the ball (clamped at 0)
    Rational abs_lower(unsigned bits) const {
        Rational lo = mid_abs(bits).lo - rad_;
        return lo < 0 ? Rational(0) : lo;
    }
    RatInterval abs_interval(unsigned bits) const { return {abs_lower(bits), abs_upper(bits)}; }

    Ball operator*(const Ball& o) const {
        unsigned b = std::min(bits_, o.bits_);
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        Rational rad =
            mid_abs_cheap_upper() * o.rad_ + o.mid_abs_cheap_upper() * rad_ + rad_ * o.rad_;
        return {std::move(re), std::move(im), std::move(rad), b};
    }

    // exact complex-rational scaling (no radius inflation beyond |c| * rad)
    Ball scale(const Rational& c_re, const Rational& c_im) const {
        Rational re = re_ * c_re - im_ * c_im;
        Rational im = re_ * c_im + im_ * c_re;
        Rational rad = (quadcf::abs(c_re) + quadcf::abs(c_im)) * rad_;
        return {std::move(re), std::move(im), std::move(rad), bits_};
    }

    /// Reciprocal; requires the ball to exclude 0 certifiably at `bits`.
    Ball inverse(unsigned bits) const {
        RatInterval m = mid_abs(bits);
        Rational zlo = m.lo - rad_;
        if (m.lo <= 0 || zlo <= 0)
            throw CertificationFailure("ball reciprocal: cannot certify nonzero");
        Rational n = mid_norm();
        // 1/mid exactly, then |1/z - 1/mid| <= rad / (|z| |mid|)
        Rational rad = rad_ / (zlo * m.lo);
        return {re_ / n, -im_ / n, std::move(rad), bits};
    }

    Ball operator/(const Ball& o) const {
        unsigned b = std::min(bits_, o.bits_);
        return *this * o.inverse(b);
    }

    /// Does the ball contain the exact rational point (re, im)?
    bool contains(const Rational& re, const Rational& im) const {
        Rational dx = re - re_, dy = im - im_;
        return dx * dx + dy * dy <= rad_ * rad_;
    }

    /// Exact containment test for a field element (Eisenstein embeds with a
    /// sqrt(3) component, decided by exact sign evaluation in Q(sqrt(3))).
    bool contains_field(const FieldElement& v) const {
        Rational dx = v.real_part() - re_;
        Rational c = v.im_coeff();
        if (v.kind() == LatticeKind::Gaussian)
            return contains(v.real_part(), v.im_coeff());
        // dist^2 = dx^2 + (c*sqrt(3) - im)^2 = A - B sqrt(3),
        // A = dx^2 + 3c^2 + im^2, B = 2 c im; test dist^2 <= rad^2
        Rational A = dx * dx + 3 * c * c + im_ * im_ - rad_ * rad_;
        Rational B = 2 * c * im_;
        return sign_a_plus_b_sqrt(A, -B, 3) <= 0;
    }

    std::string str(unsigned digits = 20) const {
        return "[" + decimal_string(re_, digits) + (sign(im_) < 0 ? " - " : " + ") +
               decimal_string(quadcf::abs(im_), digits) + "i +/- " +
               decimal_string_upper(rad_, digits) + "]";
    }

private:
    Rational re_, im_, rad_;
    unsigned bits_;
};

/// Numeric embedding of an exact field element. Gaussian values embed with
/// radius 0; Eisenstein values carry a sqrt(3) enclosure at `bits` unless the
/// imaginary coefficient vanishes.
inline Ball embed_numeric(const FieldElement& v, unsigned bits) {
    if (v.kind() == LatticeKind::Gaussian) return Ball::exact(v.x(), v.y(), bits);
    Rational re = v.real_part();
    Rational c = v.im_coeff();
    if (c == 0) return Ball::exact(std::move(re), 0, bits);
    RatInterval s3 = sqrt_interval(Rational(3), bits);
    RatInterval im = s3 * c;  // sign-aware
    return {std::move(re), im.mid(), im.width() / 2, bits};
}

inline Ball embed_numeric(const LatticePoint& p, unsigned bits) {
    return embed_numeric(FieldElement::from_lattice(p), bits);
}

/**
 * Principal square root of an exact field element: the branch with
 * arg in (-pi/2, pi/2], so exact negative reals map to +i sqrt(|.|).
 *
 * Uses only exact data: |w|^2, Re w, and sign(Im w) are rational for both
 * kinds, so the result box comes from nested integer-sqrt enclosures.
 */
inline Ball principal_sqrt_exact(const FieldElement& w, unsigned bits) {
    if (w.is_zero()) return Ball::zero();
    const Rational R = w.real_part();
    const int s = w.im_sign();

    if (s == 0) {
        // real axis: R > 0 -> sqrt(R); R < 0 -> i sqrt(-R) (theta = pi branch)
        RatInterval r = sqrt_interval(R > 0 ? R : Rational(-R), bits);
        Rational mid = r.mid(), rad = r.width() / 2;
        return R > 0 ? Ball{std::move(mid), 0, std::move(rad), bits}
                     : Ball{0, std::move(mid), std::move(rad), bits};
    }

    RatInterval W = sqrt_interval(w.norm(), bits);  // |w|
    // Re sqrt(w) = sqrt((|w| + Re w)/2) > 0, Im magnitude = sqrt((|w| - Re w)/2)
    RatInterval re = sqrt_interval((W + R) * Rational(1, 2), bits);
    RatInterval im = sqrt_interval((W - R) * Rational(1, 2), bits);
    if (s < 0) im = im * Rational(-1);
    // box -> ball, radius bounded by half the L1 diagonal
    Rational rad = (re.width() + quadcf::abs(im.width())) / 2;
    return {re.mid(), im.mid(), std::move(rad), bits};
}

/**
 * Principal square root of a ball. Exact inputs (radius 0, rational
 * coordinates) take the deterministic branch rules including the negative
 * real axis; approximate inputs must certifiably avoid the branch cut
 * {Re <= 0, Im = 0} and 0, otherwise CertificationFailure — the caller
 * refines or supplies the exact value.
 */
inline Ball principal_sqrt(const Ball& z, unsigned bits) {
    if (z.is_exact())
        return principal_sqrt_exact(FieldElement(LatticeKind::Gaussian, z.re(), z.im()), bits);

    const Rational& r = z.radius();
    // distance from midpoint to the cut: |Im| if Re <= 0, else |mid|
    bool clear_of_cut;
    if (z.re() <= 0)
        clear_of_cut = quadcf::abs(z.im()) > r;
    else
        clear_of_cut = z.mid_norm() > r * r;
    if (!clear_of_cut)
        throw CertificationFailure("principal_sqrt: ball straddles the branch cut");

    Ball sm = principal_sqrt_exact(FieldElement(LatticeKind::Gaussian, z.re(), z.im()), bits);
    // Lipschitz over the disc: |sqrt(a) - sqrt(m)| <= |a - m| / Re(sqrt(m))
    // (both roots principal, Re sqrt >= 0). Need a positive lower bound.
    RatInterval W = sqrt_interval(z.mid_norm(), bits);
    RatInterval re_sq = (W + z.re()) * Rational(1, 2);
    if (re_sq.lo <= 0)
        throw CertificationFailure("principal_sqrt: midpoint too close to the cut at this precision");
    Rational re_lo = sqrt_interval(re_sq.lo, bits).lo;
    if (re_lo <= 0) throw CertificationFailure("principal_sqrt: Re lower bound underflow");
    return {sm.re(), sm.im(), sm.radius() + r / re_lo, bits};
}

}  // namespace quadcf
