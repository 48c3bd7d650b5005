#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

#include "quadcf/errors.hpp"

namespace quadcf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational refuses negative denominators at construction, so every
// num/den pair goes through here.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Integer& n) { return n.sign(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// floor(p/q) with the denominator always positive (canonical form).
inline Integer floor_rat(const Rational& r) {
    Integer q = num(r) / den(r);
    if (num(r) < 0 && q * den(r) != num(r)) --q;
    return q;
}

inline Integer ceil_rat(const Rational& r) { return -floor_rat(-r); }

// [x + 1/2] — the rounding used for Gaussian integer parts. Ties go up.
inline Integer round_half_up(const Rational& r) { return floor_rat(r + Rational(1, 2)); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// Closed rational interval; used as a certified enclosure of a real value.
struct RatInterval {
    Rational lo, hi;

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator+(const Rational& c) const { return {lo + c, hi + c}; }
    RatInterval operator-(const Rational& c) const { return {lo - c, hi - c}; }
    RatInterval operator*(const Rational& c) const {
        return c >= 0 ? RatInterval{lo * c, hi * c} : RatInterval{hi * c, lo * c};
    }
    RatInterval operator*(const RatInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rational mn = a, mx = a;
        for (const Rational& v : {b, c, d}) {
            if (v < mn) mn = v;
            if (v > mx) mx = v;
        }
        return {mn, mx};
    }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

// Reciprocal of an interval that certifiably excludes zero.
inline RatInterval inv_interval(const RatInterval& x) {
    if (x.lo <= 0 && x.hi >= 0) throw CertificationFailure("interval reciprocal across zero");
    return {Rational(1) / x.hi, Rational(1) / x.lo};
}

// x^k for integer k (negative allowed when the interval excludes zero).
inline RatInterval pow_interval(RatInterval x, long k) {
    if (k < 0) {
        x = inv_interval(x);
        k = -k;
    }
    RatInterval r{Rational(1), Rational(1)};
    // plain repeated squaring; intervals here are tiny and positive
    while (k > 0) {
        if (k & 1) r = r * x;
        x = x * x;
        k >>= 1;
    }
    return r;
}

// Certified enclosure of sqrt(q) for q >= 0 with width <= 2^-bits.
// sqrt(n/d) = sqrt(n*d)/d; an integer floor-sqrt of n*d*4^bits gives the
// bracketing dyadic-over-d pair.
inline RatInterval sqrt_interval(const Rational& q, unsigned bits) {
    if (q < 0) throw DomainError("sqrt_interval of negative rational");
    if (q == 0) return {Rational(0), Rational(0)};
    Integer m = num(q) * den(q);
    Integer scaled = m << (2 * bits);
    Integer s = boost::multiprecision::sqrt(scaled);
    Integer d = den(q) << bits;
    Rational lo = make_rational(s, d);
    Rational hi = make_rational(s + 1, d);
    if (lo * lo == q) hi = lo;  // exact square: collapse
    return {lo, hi};
}

// Monotone wrapper: sqrt over a nonnegative interval (lo clamped at 0,
// covering enclosures whose lower end dips below a true nonnegative value).
inline RatInterval sqrt_interval(const RatInterval& x, unsigned bits) {
    Rational lo = x.lo < 0 ? Rational(0) : x.lo;
    if (x.hi < 0) throw DomainError("sqrt_interval of negative interval");
    return {sqrt_interval(lo, bits).lo, sqrt_interval(x.hi, bits).hi};
}

// Outward rounding to dyadics with 2^-bits resolution. Keeps endpoint sizes
// bounded through long products at the cost of <= 2^-bits widening per call.
inline Rational dyadic_floor(const Rational& x, unsigned bits) {
    Integer scale = Integer(1) << bits;
    return make_rational(floor_rat(x * scale), scale);
}
inline Rational dyadic_ceil(const Rational& x, unsigned bits) {
    Integer scale = Integer(1) << bits;
    return make_rational(ceil_rat(x * scale), scale);
}
inline RatInterval round_out(const RatInterval& x, unsigned bits) {
    return {dyadic_floor(x.lo, bits), dyadic_ceil(x.hi, bits)};
}

// Exact test: is q the square of a rational? (num and den must both be
// perfect integer squares.) Optionally returns the nonnegative root.
inline bool is_rational_square(const Rational& q, Rational* root = nullptr) {
    if (q < 0) return false;
    Integer sn = boost::multiprecision::sqrt(Integer(num(q)));
    Integer sd = boost::multiprecision::sqrt(Integer(den(q)));
    if (sn * sn != num(q) || sd * sd != den(q)) return false;
    if (root) *root = make_rational(sn, sd);
    return true;
}

// Exact sign of a + b*sqrt(r) for rationals a, b and r >= 0.
inline int sign_a_plus_b_sqrt(const Rational& a, const Rational& b, const Rational& r) {
    if (r < 0) throw DomainError("sign_a_plus_b_sqrt: negative radicand");
    if (b == 0 || r == 0) return sign(a);
    if (a == 0) return sign(b);
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    // opposite signs: compare a^2 vs b^2 r
    Rational lhs = a * a, rhs = b * b * r;
    int cmp = lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
    if (cmp == 0) return 0;
    // |a| dominates -> sign(a), else sign(b)
    return cmp > 0 ? sign(a) : sign(b);
}

// Fixed-point decimal rendering, round-to-nearest (ties away from zero).
// Exact values with short expansions print exactly; "digits" caps the
// fractional places.
inline std::string decimal_string(const Rational& x, unsigned digits = 30) {
    if (x == 0) return "0";
    bool neg = x < 0;
    Rational a = neg ? Rational(-x) : x;
    Integer scale = boost::multiprecision::pow(Integer(10), digits);
    // round(a * scale)
    Rational scaled = a * scale;
    Integer n = floor_rat(scaled + Rational(1, 2));
    Integer ip = n / scale;
    Integer fp = n % scale;
    std::string out = ip.str();
    if (fp != 0) {
        std::string f = fp.str();
        f.insert(f.begin(), digits - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    if (neg) out.insert(out.begin(), '-');
    return out;
}

// Upper-bound decimal rendering for radii: never prints below the value.
inline std::string decimal_string_upper(const Rational& x, unsigned digits = 12) {
    if (x == 0) return "0";
    if (x < 0) throw DomainError("decimal_string_upper: negative");
    Integer scale = boost::multiprecision::pow(Integer(10), digits);
    Integer n = ceil_rat(x * scale);
    Integer ip = n / scale;
    Integer fp = n % scale;
    std::string out = ip.str();
    if (fp != 0) {
        std::string f = fp.str();
        f.insert(f.begin(), digits - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    return out;
}

// Strict base-10 integer parsing. cpp_int's string constructor treats a
// leading zero as an octal prefix, so digits are validated and zeros
// stripped here.
inline std::optional<Integer> parse_integer(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i >= s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    Integer v(s.substr(i));
    return neg ? Integer(-v) : v;
}

inline std::optional<Rational> parse_rational(const std::string& s) {
    // accepts "p", "p/q", optional leading sign
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        auto p = parse_integer(s);
        if (!p) return std::nullopt;
        return Rational(*p);
    }
    auto p = parse_integer(s.substr(0, slash));
    auto q = parse_integer(s.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return make_rational(*p, *q);
}

inline std::string rational_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

}  // namespace quadcf
