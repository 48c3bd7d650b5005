#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadcf/convergents.hpp"
#include "quadcf/roots.hpp"

namespace quadcf {

/**
 * A finite continued fraction a_0; a_1, ..., a_N with exact field-element
 * entries. `terminated` marks words whose expansion hit an exact zero
 * remainder (property (H1)): the word then represents its value exactly.
 */
struct CFWord {
    FieldElement a0;
    std::vector<FieldElement> partials;
    bool terminated = false;

    LatticeKind kind() const { return a0.kind(); }
    std::size_t length() const { return partials.size(); }

    bool operator==(const CFWord& o) const { return a0 == o.a0 && partials == o.partials; }

    /// Hurwitz legality: every partial with index >= 1 is a lattice point
    /// outside {0} and the units (norm > 1).
    bool partials_legal() const {
        for (const FieldElement& a : partials) {
            if (!a.is_lattice()) return false;
            if (a.to_lattice().norm() <= 1) return false;
        }
        return true;
    }

    std::string str() const {
        std::string s = "[" + (a0.is_lattice() ? a0.to_lattice().str() : a0.str()) + ";";
        for (std::size_t i = 0; i < partials.size(); ++i) {
            s += i ? ", " : " ";
            s += partials[i].is_lattice() ? partials[i].to_lattice().str() : partials[i].str();
        }
        return s + "]" + (terminated ? " (terminated)" : "");
    }
};

/// Exact value of the word via the convergent recurrence in K.
inline FieldElement eval_cf(const CFWord& word) {
    std::vector<FieldElement> terms{word.a0};
    terms.insert(terms.end(), word.partials.begin(), word.partials.end());
    return eval_convergents(terms, FieldElement::one(word.kind()));
}

/**
 * Hurwitz expansion of an exact extension element: a_n = [z_n], z_{n+1} =
 * 1/(z_n - a_n), every remainder exact in K(alpha), rounding certified
 * numerically. Produces a_0 and up to `count` further partials; stops early
 * (flagged) on an exact zero remainder.
 */
inline CFWord hurwitz_expand(const QuadExtElement& z, unsigned count,
                             const PrecisionPolicy& policy = {}) {
    const LatticeKind k = z.kind();
    CFWord word{FieldElement::zero(k), {}, false};

    QuadExtElement zn = z;
    LatticePoint a = certified_round(zn, policy);
    word.a0 = FieldElement::from_lattice(a);
    QuadExtElement rem = zn - QuadExtElement::from_field(z.params(), FieldElement::from_lattice(a));
    for (unsigned n = 1; n <= count; ++n) {
        if (rem.is_zero()) {
            word.terminated = true;
            return word;
        }
        zn = rem.inverse();
        a = certified_round(zn, policy);
        word.partials.push_back(FieldElement::from_lattice(a));
        rem = zn - QuadExtElement::from_field(z.params(), FieldElement::from_lattice(a));
    }
    if (rem.is_zero()) word.terminated = true;
    return word;
}

/// Same expansion for plain field elements — everything exact, terminates
/// for every input (property (H1)). For real rationals over the Gaussian
/// lattice this is the nearest integer continued fraction.
inline CFWord hurwitz_expand(const FieldElement& z, unsigned count) {
    CFWord word{FieldElement::zero(z.kind()), {}, false};
    FieldElement zn = z;
    LatticePoint a = round_nearest(zn);
    word.a0 = FieldElement::from_lattice(a);
    FieldElement rem = zn - FieldElement::from_lattice(a);
    for (unsigned n = 1; n <= count; ++n) {
        if (rem.is_zero()) {
            word.terminated = true;
            return word;
        }
        zn = rem.inverse();
        a = round_nearest(zn);
        word.partials.push_back(FieldElement::from_lattice(a));
        rem = zn - FieldElement::from_lattice(a);
    }
    if (rem.is_zero()) word.terminated = true;
    return word;
}

enum class RootChoice { Alpha, Beta };

/// The closed-form periodic word: alpha = [0; u^{-1}t, -t, ...],
/// beta = [t; -u^{-1}t, t, ...], with `count` partials after the head.
inline CFWord predicted_expansion(const QuadParams& p, RootChoice root, unsigned count) {
    const LatticeKind k = p.kind();
    const LatticePoint t = p.t();
    const LatticePoint uinv_t = p.u().inverse().value() * t;
    CFWord word{FieldElement::zero(k), {}, false};
    if (root == RootChoice::Alpha) {
        for (unsigned n = 1; n <= count; ++n)
            word.partials.push_back(FieldElement::from_lattice(n % 2 ? uinv_t : -t));
    } else {
        word.a0 = FieldElement::from_lattice(t);
        for (unsigned n = 1; n <= count; ++n)
            word.partials.push_back(FieldElement::from_lattice(n % 2 ? -uinv_t : t));
    }
    return word;
}

struct PeriodicityReport {
    std::size_t preperiod_length = 0;
    std::size_t period_length = 0;
    std::vector<LatticePoint> period;
};

/**
 * Minimal (period, then preperiod) fitting the examined window, by direct
 * search over the full sequence a_0, a_1, .... A period must repeat through
 * the window end and cover at least two full cycles. Returns nullopt when
 * no period <= length/2 fits.
 */
inline std::optional<PeriodicityReport> detect_periodicity(const CFWord& word) {
    std::vector<FieldElement> seq{word.a0};
    seq.insert(seq.end(), word.partials.begin(), word.partials.end());
    const std::size_t L = seq.size();
    if (L < 4) throw DomainError("detect_periodicity: need word length >= 4");

    for (std::size_t p = 1; p <= L / 2; ++p) {
        for (std::size_t s = 0; s + 2 * p <= L; ++s) {
            bool ok = true;
            for (std::size_t i = s; i + p < L && ok; ++i) ok = seq[i] == seq[i + p];
            if (!ok) continue;
            PeriodicityReport rep;
            rep.preperiod_length = s;
            rep.period_length = p;
            for (std::size_t i = s; i < s + p; ++i) rep.period.push_back(seq[i].to_lattice());
            return rep;
        }
    }
    return std::nullopt;
}

/**
 * The real symmetric simple continued fraction
 *   [0; t-1, 1, t-2, ..., 1, t-2, 1, t-1]
 * with the block "1, t-2" repeated 2^{n+1}-3 times (2^{n+2}-3 partials in
 * total); equals S_n(t, 1) for integer t >= 3.
 */
inline CFWord symmetric_simple_cf(long t, unsigned n) {
    if (t < 3 || n < 1) throw DomainError("symmetric_simple_cf: need t >= 3, n >= 1");
    const LatticeKind k = LatticeKind::Gaussian;
    auto fe = [&](long v) { return FieldElement{k, Rational(v), Rational(0)}; };
    CFWord word{FieldElement::zero(k), {}, true};
    word.partials.push_back(fe(t - 1));
    const unsigned long reps = (1ul << (n + 1)) - 3;
    for (unsigned long i = 0; i < reps; ++i) {
        word.partials.push_back(fe(1));
        word.partials.push_back(fe(t - 2));
    }
    word.partials.push_back(fe(1));
    word.partials.push_back(fe(t - 1));
    return word;
}

}  // namespace quadcf
