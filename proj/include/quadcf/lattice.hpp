#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "quadcf/numbers.hpp"

namespace quadcf {

// Gaussian basis {1, i}; Eisenstein basis {b, conj(b)} with b = (1+sqrt(-3))/2.
enum class LatticeKind { Gaussian, Eisenstein };

inline std::string kind_tag(LatticeKind k) { return k == LatticeKind::Gaussian ? "G" : "E"; }

/**
 * A point of Z[i] or Z[(1+sqrt(-3))/2], stored as integer coordinates in the
 * kind's basis. Embedded value: Gaussian x + y*i; Eisenstein x*b + y*conj(b).
 */
class LatticePoint {
public:
    LatticePoint(LatticeKind kind, Integer x, Integer y)
        : kind_(kind), x_(std::move(x)), y_(std::move(y)) {}

    static LatticePoint zero(LatticeKind k) { return {k, 0, 0}; }
    static LatticePoint one(LatticeKind k) {
        // 1 = b + conj(b) in the Eisenstein basis
        return k == LatticeKind::Gaussian ? LatticePoint{k, 1, 0} : LatticePoint{k, 1, 1};
    }

    LatticeKind kind() const { return kind_; }
    const Integer& x() const { return x_; }
    const Integer& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }

    LatticePoint operator+(const LatticePoint& o) const {
        check_kind(o);
        return {kind_, x_ + o.x_, y_ + o.y_};
    }
    LatticePoint operator-(const LatticePoint& o) const {
        check_kind(o);
        return {kind_, x_ - o.x_, y_ - o.y_};
    }
    LatticePoint operator-() const { return {kind_, -x_, -y_}; }

    LatticePoint operator*(const LatticePoint& o) const {
        check_kind(o);
        if (kind_ == LatticeKind::Gaussian)
            return {kind_, x_ * o.x_ - y_ * o.y_, x_ * o.y_ + y_ * o.x_};
        // b^2 = b - 1, conj(b)^2 = conj(b) - 1, b*conj(b) = 1, 1 = b + conj(b)
        Integer c = x_ * o.y_ + y_ * o.x_ - x_ * o.x_ - y_ * o.y_;
        return {kind_, x_ * o.x_ + c, y_ * o.y_ + c};
    }

    bool operator==(const LatticePoint& o) const {
        return kind_ == o.kind_ && x_ == o.x_ && y_ == o.y_;
    }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }

    // complex conjugation: Gaussian negates y, Eisenstein swaps coordinates
    LatticePoint conj() const {
        if (kind_ == LatticeKind::Gaussian) return {kind_, x_, -y_};
        return {kind_, y_, x_};
    }

    // |z|^2, an exact integer: x^2+y^2 (Gaussian), x^2-xy+y^2 (Eisenstein)
    Integer norm() const {
        if (kind_ == LatticeKind::Gaussian) return x_ * x_ + y_ * y_;
        return x_ * x_ - x_ * y_ + y_ * y_;
    }

    // exact real part of the embedded value
    Rational real_part() const {
        if (kind_ == LatticeKind::Gaussian) return Rational(x_);
        return make_rational(x_ + y_, 2);
    }
    // exact imaginary part for Gaussian; Eisenstein Im = im_coeff * sqrt(3)
    Rational im_coeff() const {
        if (kind_ == LatticeKind::Gaussian) return Rational(y_);
        return make_rational(x_ - y_, 2);
    }

    // total order for deterministic set storage: by (x, y)
    bool operator<(const LatticePoint& o) const {
        if (x_ != o.x_) return x_ < o.x_;
        return y_ < o.y_;
    }

    std::string str() const;

private:
    void check_kind(const LatticePoint& o) const {
        if (kind_ != o.kind_) throw DomainError("mixed lattice kinds");
    }

    LatticeKind kind_;
    Integer x_, y_;
};

inline std::string LatticePoint::str() const {
    if (kind_ == LatticeKind::Gaussian) {
        std::string s = x_.str();
        if (y_ == 0) return s;
        std::string ys = y_ == 1 ? "" : (y_ == -1 ? "-" : y_.str());
        std::string t = (y_ > 0 ? "+" : "") + ys + "i";
        if (x_ == 0) return (y_ > 0 ? "" : "") + ys + "i";
        return s + t;
    }
    // Eisenstein printed as a+cw with w = b: coords (x,y) = a*(1,1) + c*(1,0)
    Integer a = y_, c = x_ - y_;
    if (c == 0) return a.str();
    std::string cs = c == 1 ? "" : (c == -1 ? "-" : c.str());
    if (a == 0) return cs + "w";
    return a.str() + (c > 0 ? "+" : "") + cs + "w";
}

/**
 * A root of unity of the kind's lattice: {±1, ±i} (Gaussian) or the six
 * powers of b (Eisenstein). Exactly the lattice points of norm 1.
 */
class UnitValue {
public:
    UnitValue(LatticeKind kind, const LatticePoint& v) : value_(v) {
        if (v.kind() != kind) throw DomainError("unit kind mismatch");
        if (v.norm() != 1) throw DomainError("not a unit: " + v.str());
    }
    explicit UnitValue(const LatticePoint& v) : UnitValue(v.kind(), v) {}

    LatticeKind kind() const { return value_.kind(); }
    const LatticePoint& value() const { return value_; }

    // |u| = 1 so the inverse is the conjugate
    UnitValue inverse() const { return UnitValue(value_.conj()); }

    UnitValue operator*(const UnitValue& o) const { return UnitValue(value_ * o.value_); }
    bool operator==(const UnitValue& o) const { return value_ == o.value_; }

    static std::vector<UnitValue> all(LatticeKind k) {
        std::vector<UnitValue> out;
        if (k == LatticeKind::Gaussian) {
            // 1, i, -1, -i
            out.emplace_back(LatticePoint{k, 1, 0});
            out.emplace_back(LatticePoint{k, 0, 1});
            out.emplace_back(LatticePoint{k, -1, 0});
            out.emplace_back(LatticePoint{k, 0, -1});
        } else {
            // b^0 .. b^5
            LatticePoint b{k, 1, 0};
            LatticePoint u = LatticePoint::one(k);
            for (int j = 0; j < 6; ++j) {
                out.emplace_back(u);
                u = u * b;
            }
        }
        return out;
    }

    // exponent j with *this == b^j (Eisenstein) or i^j (Gaussian)
    int unit_index() const {
        LatticeKind k = kind();
        LatticePoint g = k == LatticeKind::Gaussian ? LatticePoint{k, 0, 1} : LatticePoint{k, 1, 0};
        LatticePoint u = LatticePoint::one(k);
        int order = k == LatticeKind::Gaussian ? 4 : 6;
        for (int j = 0; j < order; ++j) {
            if (u == value_) return j;
            u = u * g;
        }
        throw DomainError("unit_index: not a unit");
    }

private:
    LatticePoint value_;
};

enum class ExclusionLevel { L1, L2, L3 };

inline std::string level_tag(ExclusionLevel l) {
    switch (l) {
        case ExclusionLevel::L1: return "L1";
        case ExclusionLevel::L2: return "L2";
        default: return "L3";
    }
}

/**
 * One of the finite parameter sets of t values excluded at a given level:
 * root separation (L1), disc location (L2), or the convergence bound (L3).
 * Members are kept sorted by (x, y) for deterministic serialization.
 */
struct ExclusionSet {
    LatticeKind kind;
    ExclusionLevel level;
    UnitValue unit;
    std::vector<LatticePoint> members;

    void normalize() {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }
    bool contains(const LatticePoint& p) const {
        return std::binary_search(members.begin(), members.end(), p);
    }
    bool same_members(const ExclusionSet& o) const { return members == o.members; }
};

namespace detail {

inline void push_pm(std::vector<LatticePoint>& v, LatticeKind k, long x, long y) {
    v.emplace_back(k, x, y);
    v.emplace_back(k, -x, -y);
}

inline std::vector<LatticePoint> gaussian_D() {
    std::vector<LatticePoint> v;
    for (long x = -1; x <= 1; ++x)
        for (long y = -1; y <= 1; ++y) v.emplace_back(LatticeKind::Gaussian, x, y);
    return v;
}

// {0} together with the six Eisenstein units
inline std::vector<LatticePoint> eisenstein_E() {
    std::vector<LatticePoint> v;
    v.push_back(LatticePoint::zero(LatticeKind::Eisenstein));
    for (const auto& u : UnitValue::all(LatticeKind::Eisenstein)) v.push_back(u.value());
    return v;
}

// all z in R_E with |z| <= 2, i.e. norm <= 4
inline std::vector<LatticePoint> eisenstein_star() {
    std::vector<LatticePoint> v;
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y) {
            LatticePoint p{LatticeKind::Eisenstein, x, y};
            if (p.norm() <= 4) v.push_back(p);
        }
    return v;
}

}  // namespace detail

/// The transcribed exclusion set for (kind, level, unit).
inline ExclusionSet builtin_exclusion_set(LatticeKind kind, ExclusionLevel level,
                                          const UnitValue& unit) {
    using detail::push_pm;
    if (unit.kind() != kind) throw DomainError("exclusion set: unit kind mismatch");
    std::vector<LatticePoint> v;
    const int j = unit.unit_index();

    if (kind == LatticeKind::Gaussian) {
        if (level == ExclusionLevel::L1) {
            v.push_back(LatticePoint::zero(kind));
            switch (j) {
                case 0:  // u = 1
                    push_pm(v, kind, 1, 0);
                    push_pm(v, kind, 2, 0);
                    break;
                case 2:  // u = -1
                    push_pm(v, kind, 0, 1);
                    push_pm(v, kind, 0, 2);
                    break;
                case 1:  // u = i
                    push_pm(v, kind, 1, 1);
                    break;
                default:  // u = -i
                    push_pm(v, kind, 1, -1);
                    break;
            }
        } else {
            v = detail::gaussian_D();
            switch (j) {
                case 0: push_pm(v, kind, 2, 0); break;
                case 2: push_pm(v, kind, 0, 2); break;
                case 1:
                    push_pm(v, kind, 1, 2);
                    push_pm(v, kind, 2, 1);
                    break;
                default:
                    push_pm(v, kind, 1, -2);
                    push_pm(v, kind, 2, -1);
                    break;
            }
            if (level == ExclusionLevel::L3) {
                push_pm(v, kind, 2, 0);
                push_pm(v, kind, 0, 2);
            }
        }
    } else {
        if (level == ExclusionLevel::L3) {
            v = detail::eisenstein_star();
        } else if (level == ExclusionLevel::L1) {
            v.push_back(LatticePoint::zero(kind));
            switch (j) {
                case 0:
                    push_pm(v, kind, 1, 1);
                    push_pm(v, kind, 2, 2);
                    break;
                case 1: push_pm(v, kind, 2, 1); break;
                case 2:
                    push_pm(v, kind, 1, 0);
                    push_pm(v, kind, 2, 0);
                    break;
                case 3: push_pm(v, kind, 1, -1); break;
                case 4:
                    push_pm(v, kind, 0, 1);
                    push_pm(v, kind, 0, 2);
                    break;
                default: push_pm(v, kind, 1, 2); break;
            }
        } else {
            v = detail::eisenstein_E();
            switch (j) {
                case 0:
                    push_pm(v, kind, 1, 2);
                    push_pm(v, kind, 2, 1);
                    push_pm(v, kind, 2, 2);
                    break;
                case 1:
                    push_pm(v, kind, 2, 0);
                    push_pm(v, kind, 2, 1);
                    push_pm(v, kind, 2, 2);
                    break;
                case 2:
                    push_pm(v, kind, 1, -1);
                    push_pm(v, kind, 2, 0);
                    push_pm(v, kind, 2, 1);
                    break;
                case 3:
                    push_pm(v, kind, 0, 2);
                    push_pm(v, kind, 1, -1);
                    push_pm(v, kind, 2, 0);
                    break;
                case 4:
                    push_pm(v, kind, 0, 2);
                    push_pm(v, kind, 1, -1);
                    push_pm(v, kind, 1, 2);
                    break;
                default:
                    push_pm(v, kind, 0, 2);
                    push_pm(v, kind, 1, 2);
                    push_pm(v, kind, 2, 2);
                    break;
            }
        }
    }

    ExclusionSet set{kind, level, unit, std::move(v)};
    set.normalize();
    return set;
}

}  // namespace quadcf
