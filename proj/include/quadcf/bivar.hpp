#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "quadcf/numbers.hpp"

namespace quadcf {

/**
 * Sparse polynomial in Z[T,U]: exponent pair -> nonzero integer coefficient.
 * The map ordering makes iteration (and serialization) deterministic.
 */
class BivarPoly {
public:
    using Key = std::pair<unsigned, unsigned>;  // (deg_T, deg_U)
    using Terms = std::map<Key, Integer>;

    BivarPoly() = default;

    static BivarPoly constant(Integer c) {
        BivarPoly p;
        if (c != 0) p.terms_[{0, 0}] = std::move(c);
        return p;
    }
    static BivarPoly monomial(Integer c, unsigned dT, unsigned dU) {
        BivarPoly p;
        if (c != 0) p.terms_[{dT, dU}] = std::move(c);
        return p;
    }
    static BivarPoly T() { return monomial(1, 1, 0); }
    static BivarPoly U(unsigned power = 1) { return monomial(1, 0, power); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    unsigned deg_T() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }
    unsigned deg_U() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }
    std::size_t term_count() const { return terms_.size(); }

    BivarPoly operator+(const BivarPoly& o) const {
        BivarPoly r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    BivarPoly operator-(const BivarPoly& o) const {
        BivarPoly r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }
    BivarPoly operator-() const {
        BivarPoly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    BivarPoly operator*(const BivarPoly& o) const {
        BivarPoly r;
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_)
                r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
        return r;
    }
    BivarPoly scale(const Integer& c) const {
        BivarPoly r;
        if (c == 0) return r;
        for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
        return r;
    }

    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    Rational eval(const Rational& t, const Rational& u) const {
        // sparse Horner is overkill here; powers are cached per call
        Rational acc = 0;
        for (const auto& [k, c] : terms_) acc += Rational(c) * pow_rat(t, k.first) * pow_rat(u, k.second);
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string mono;
            if (k.first) mono += "T" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second) mono += std::string(mono.empty() ? "" : "*") + "U" +
                                  (k.second > 1 ? "^" + std::to_string(k.second) : "");
            std::string cs = c.str();
            if (!out.empty() && c > 0) out += "+";
            if (mono.empty()) out += cs;
            else if (c == 1) out += mono;
            else if (c == -1) out += "-" + mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

private:
    static Rational pow_rat(const Rational& base, unsigned e) {
        Rational r = 1, b = base;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    void add_term(const Key& k, const Integer& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (c != 0) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

/**
 * Unreduced fraction in Q(T,U). No gcd normalization anywhere: equality is
 * the cross-multiplied test n1*d2 == n2*d1, exact in the integral domain.
 */
class BivarRatFunc {
public:
    BivarRatFunc() : num_(BivarPoly::constant(0)), den_(BivarPoly::constant(1)) {}
    BivarRatFunc(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    }
    static BivarRatFunc from_poly(BivarPoly p) { return {std::move(p), BivarPoly::constant(1)}; }
    static BivarRatFunc constant(Integer c) { return from_poly(BivarPoly::constant(std::move(c))); }

    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    BivarRatFunc operator+(const BivarRatFunc& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    BivarRatFunc operator-(const BivarRatFunc& o) const {
        return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
    }
    BivarRatFunc operator-() const { return {-num_, den_}; }
    BivarRatFunc operator*(const BivarRatFunc& o) const {
        return {num_ * o.num_, den_ * o.den_};
    }
    BivarRatFunc operator/(const BivarRatFunc& o) const {
        if (o.num_.is_zero()) throw DivisionByZero("division by zero rational function");
        return {num_ * o.den_, den_ * o.num_};
    }
    BivarRatFunc inverse() const {
        if (num_.is_zero()) throw DivisionByZero("inverse of zero rational function");
        return {den_, num_};
    }

    bool operator==(const BivarRatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const BivarRatFunc& o) const { return !(*this == o); }

    /// Exact value at a rational point; nullopt when the denominator vanishes.
    std::optional<Rational> eval(const Rational& t, const Rational& u) const {
        Rational d = den_.eval(t, u);
        if (d == 0) return std::nullopt;
        return num_.eval(t, u) / d;
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    BivarPoly num_, den_;
};

}  // namespace quadcf
