#pragma once

#include <random>
#include <string>
#include <vector>

#include "quadcf/bivar.hpp"
#include "quadcf/convergents.hpp"

namespace quadcf {

/// Degree cap for the doubling constructions (h_n, Newton iterates).
struct SymbolicConfig {
    unsigned cap = 6;
};

enum class SymbolicCFTerm { Zero, PlusT, MinusT, UinvT, MinusUinvT };

inline BivarRatFunc render_term(SymbolicCFTerm t) {
    const BivarPoly T = BivarPoly::T(), U = BivarPoly::U();
    switch (t) {
        case SymbolicCFTerm::Zero: return BivarRatFunc::constant(0);
        case SymbolicCFTerm::PlusT: return BivarRatFunc::from_poly(T);
        case SymbolicCFTerm::MinusT: return BivarRatFunc::from_poly(-T);
        case SymbolicCFTerm::UinvT: return {T, U};
        default: return {-T, U};
    }
}

/// h_0 = T, h_{n+1} = h_n^2 - 2 U^{2^n}.
inline BivarPoly h_symbolic(unsigned n, const SymbolicConfig& cfg = {}) {
    if (n > cfg.cap)
        throw CapExceeded("h_symbolic: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cfg.cap));
    BivarPoly h = BivarPoly::T();
    for (unsigned m = 0; m < n; ++m)
        h = h * h - BivarPoly::monomial(2, 0, 1u << m);
    return h;
}

/// Truncated ascending series as one unreduced fraction over h_0 h_1 ... h_n.
inline BivarRatFunc s_symbolic(unsigned n, const SymbolicConfig& cfg = {}) {
    if (n > cfg.cap)
        throw CapExceeded("s_symbolic: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cfg.cap));
    // N_0 = U, D_0 = h_0; N_m = N_{m-1} h_m + U^{2^m}, D_m = D_{m-1} h_m
    BivarPoly h = BivarPoly::T();
    BivarPoly N = BivarPoly::U(), D = h;
    for (unsigned m = 1; m <= n; ++m) {
        h = h * h - BivarPoly::monomial(2, 0, 1u << (m - 1));
        N = N * h + BivarPoly::U(1u << m);
        D = D * h;
    }
    return {N, D};
}

enum class NewtonStart { AtZero, AtT };

/// The Newton iterator X -> (X^2 - U)/(2X - T) applied to a rational function.
inline BivarRatFunc newton_map(const BivarRatFunc& x) {
    const BivarPoly T = BivarPoly::T(), U = BivarPoly::U();
    const BivarPoly &n = x.num(), &d = x.den();
    BivarPoly num = n * n - U * (d * d);
    BivarPoly den = n * d.scale(2) - T * (d * d);
    return {num, den};
}

/// F^(n)(0) or F^(n)(T) as an unreduced fraction; F^(0) is the start value.
inline BivarRatFunc newton_iterate_symbolic(unsigned n, NewtonStart start,
                                            const SymbolicConfig& cfg = {}) {
    if (n > cfg.cap)
        throw CapExceeded("newton_iterate_symbolic: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cfg.cap));
    BivarRatFunc x = start == NewtonStart::AtZero ? BivarRatFunc::constant(0)
                                                  : BivarRatFunc::from_poly(BivarPoly::T());
    for (unsigned i = 0; i < n; ++i) x = newton_map(x);
    return x;
}

inline BivarRatFunc cf_symbolic(const std::vector<SymbolicCFTerm>& terms) {
    std::vector<BivarRatFunc> rendered;
    rendered.reserve(terms.size());
    for (SymbolicCFTerm t : terms) rendered.push_back(render_term(t));
    return eval_convergents(rendered, BivarRatFunc::constant(1));
}

/// a_0 = 0, a_n = U^{-1}T (odd), -T (even >= 2); `count` partials after a_0.
inline std::vector<SymbolicCFTerm> alpha_word_terms(unsigned count) {
    std::vector<SymbolicCFTerm> v{SymbolicCFTerm::Zero};
    for (unsigned n = 1; n <= count; ++n)
        v.push_back(n % 2 ? SymbolicCFTerm::UinvT : SymbolicCFTerm::MinusT);
    return v;
}

/// b_0 = T, b_n = -U^{-1}T (odd), T (even); `count` partials after b_0.
inline std::vector<SymbolicCFTerm> beta_word_terms(unsigned count) {
    std::vector<SymbolicCFTerm> v{SymbolicCFTerm::PlusT};
    for (unsigned n = 1; n <= count; ++n)
        v.push_back(n % 2 ? SymbolicCFTerm::MinusUinvT : SymbolicCFTerm::PlusT);
    return v;
}

struct PQRS {
    ConvergentTable<BivarRatFunc> pq;  // terms a_n
    ConvergentTable<BivarRatFunc> rs;  // terms b_n
};

/// Convergent numerators/denominators for both term patterns up to index N.
inline PQRS pqrs_sequences(unsigned N) {
    std::vector<BivarRatFunc> a, b;
    for (const SymbolicCFTerm t : alpha_word_terms(N)) a.push_back(render_term(t));
    for (const SymbolicCFTerm t : beta_word_terms(N)) b.push_back(render_term(t));
    const BivarRatFunc one = BivarRatFunc::constant(1);
    return {build_convergents(a, one), build_convergents(b, one)};
}

struct Theorem1Report {
    unsigned n = 0;
    bool newton_eq_series = false;   // F^{n+1}(0) = S_n
    bool series_eq_cf = false;       // S_n = [0; a_1 ... a_{2^{n+1}-1}]
    bool newton_eq_series_t = false; // F^{n+1}(T) = T - S_n
    bool series_eq_cf_t = false;     // T - S_n = [b_0; b_1 ... b_{2^{n+1}-1}]
    unsigned max_deg_T = 0, max_deg_U = 0;

    bool all() const {
        return newton_eq_series && series_eq_cf && newton_eq_series_t && series_eq_cf_t;
    }
};

/// Proves the four identities for one n by exact cross-multiplication.
inline Theorem1Report verify_theorem1(unsigned n, const SymbolicConfig& cfg = {}) {
    if (n + 1 > cfg.cap)
        throw CapExceeded("verify_theorem1: needs " + std::to_string(n + 1) +
                          " Newton steps, cap is " + std::to_string(cfg.cap));
    const unsigned len = (1u << (n + 1)) - 1;
    BivarRatFunc f0 = newton_iterate_symbolic(n + 1, NewtonStart::AtZero, cfg);
    BivarRatFunc ft = newton_iterate_symbolic(n + 1, NewtonStart::AtT, cfg);
    BivarRatFunc s = s_symbolic(n, cfg);
    BivarRatFunc cfa = cf_symbolic(alpha_word_terms(len));
    BivarRatFunc cfb = cf_symbolic(beta_word_terms(len));
    BivarRatFunc t_minus_s = BivarRatFunc::from_poly(BivarPoly::T()) - s;

    Theorem1Report r;
    r.n = n;
    r.newton_eq_series = f0 == s;
    r.series_eq_cf = s == cfa;
    r.newton_eq_series_t = ft == t_minus_s;
    r.series_eq_cf_t = t_minus_s == cfb;
    for (const BivarRatFunc* f : {&f0, &ft, &s, &cfa, &cfb}) {
        r.max_deg_T = std::max({r.max_deg_T, f->num().deg_T(), f->den().deg_T()});
        r.max_deg_U = std::max({r.max_deg_U, f->num().deg_U(), f->den().deg_U()});
    }
    return r;
}

// ---- supporting identity checks (used by verify-symbolic and tests) ----

/// F^{n+1}(0) - F^{n}(0) = U^{2^n} / (h_0 ... h_n)
inline bool check_telescoping_at_zero(unsigned n, const SymbolicConfig& cfg = {}) {
    BivarRatFunc lhs = newton_iterate_symbolic(n + 1, NewtonStart::AtZero, cfg) -
                       newton_iterate_symbolic(n, NewtonStart::AtZero, cfg);
    BivarPoly prod = BivarPoly::constant(1);
    for (unsigned m = 0; m <= n; ++m) prod = prod * h_symbolic(m, cfg);
    return lhs == BivarRatFunc{BivarPoly::U(1u << n), prod};
}

/// F^{n+1}(T) - F^{n}(T) = -U^{2^n} / (h_0 ... h_n)
inline bool check_telescoping_at_t(unsigned n, const SymbolicConfig& cfg = {}) {
    BivarRatFunc lhs = newton_iterate_symbolic(n + 1, NewtonStart::AtT, cfg) -
                       newton_iterate_symbolic(n, NewtonStart::AtT, cfg);
    BivarPoly prod = BivarPoly::constant(1);
    for (unsigned m = 0; m <= n; ++m) prod = prod * h_symbolic(m, cfg);
    return lhs == BivarRatFunc{-BivarPoly::U(1u << n), prod};
}

/// (T^2 - 4U)/(F^{n}(0)^2 - T F^{n}(0) + U) + 2 = h_{n+1} / U^{2^n}
inline bool check_h_ratio(unsigned n, const SymbolicConfig& cfg = {}) {
    SymbolicConfig relaxed = cfg;
    relaxed.cap = cfg.cap + 1;  // h_{n+1} may step one past the iterate cap
    BivarRatFunc fn = newton_iterate_symbolic(n, NewtonStart::AtZero, cfg);
    BivarRatFunc t = BivarRatFunc::from_poly(BivarPoly::T());
    BivarRatFunc u = BivarRatFunc::from_poly(BivarPoly::U());
    BivarRatFunc denom = fn * fn - t * fn + u;
    BivarRatFunc lhs = (t * t - u * BivarRatFunc::constant(4)) / denom + BivarRatFunc::constant(2);
    BivarRatFunc rhs{h_symbolic(n + 1, relaxed), BivarPoly::U(1u << n)};
    return lhs == rhs;
}

/// Lemma identities (a): p_n = q_{n-1} (odd n), p_n = -U q_{n-1} (even n).
inline bool check_pqrs_a(const PQRS& seq, long N) {
    const BivarRatFunc mu = BivarRatFunc::from_poly(-BivarPoly::U());
    for (long n = -1; n <= N; ++n) {
        const BivarRatFunc& pn = seq.pq.p_at(n);
        const BivarRatFunc& qm = seq.pq.q_at(n - 1);
        bool ok = (n % 2 != 0) ? pn == qm : pn == mu * qm;
        if (!ok) return false;
    }
    return true;
}

/// Lemma identities (b): r_n = s_{n+1} (odd n), r_n = -U s_{n+1} (even n).
/// The table must extend to index N+1.
inline bool check_pqrs_b(const PQRS& seq, long N) {
    const BivarRatFunc mu = BivarRatFunc::from_poly(-BivarPoly::U());
    for (long n = -1; n <= N; ++n) {
        const BivarRatFunc& rn = seq.rs.p_at(n);
        const BivarRatFunc& sn1 = seq.rs.q_at(n + 1);
        bool ok = (n % 2 != 0) ? rn == sn1 : rn == mu * sn1;
        if (!ok) return false;
    }
    return true;
}

/// p_n q_{n-1} - p_{n-1} q_n = (-1)^{n-1} for -1 <= n <= N.
inline bool check_determinant(const ConvergentTable<BivarRatFunc>& t, long N) {
    for (long n = -1; n <= N; ++n) {
        BivarRatFunc det = t.p_at(n) * t.q_at(n - 1) - t.p_at(n - 1) * t.q_at(n);
        if (det != BivarRatFunc::constant(n % 2 != 0 ? 1 : -1)) return false;
    }
    return true;
}

/// q_n / q_{n-1} = [a_n; a_{n-1}, ..., a_1] for 1 <= n <= N.
inline bool check_reversal(long N) {
    std::vector<BivarRatFunc> a;
    for (const SymbolicCFTerm t : alpha_word_terms(static_cast<unsigned>(N)))
        a.push_back(render_term(t));
    const BivarRatFunc one = BivarRatFunc::constant(1);
    ConvergentTable<BivarRatFunc> tab = build_convergents(a, one);
    for (long n = 1; n <= N; ++n) {
        std::vector<BivarRatFunc> rev;
        for (long k = n; k >= 1; --k) rev.push_back(a[static_cast<std::size_t>(k)]);
        if (tab.q_at(n) / tab.q_at(n - 1) != eval_convergents(rev, one)) return false;
    }
    return true;
}

/// U [a_0; a_1, ..., a_n] = [U a_0; U^{-1} a_1, U a_2, ..., U^{(-1)^n} a_n]
/// on random sequences drawn from the nonzero term forms.
inline bool check_scaling(unsigned trials, unsigned max_len, std::mt19937_64& rng) {
    const BivarRatFunc one = BivarRatFunc::constant(1);
    const BivarRatFunc U = BivarRatFunc::from_poly(BivarPoly::U());
    const SymbolicCFTerm nonzero[] = {SymbolicCFTerm::PlusT, SymbolicCFTerm::MinusT,
                                      SymbolicCFTerm::UinvT, SymbolicCFTerm::MinusUinvT};
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<unsigned> len_dist(1, max_len);
    unsigned done = 0;
    while (done < trials) {
        unsigned len = len_dist(rng);
        std::vector<BivarRatFunc> terms, scaled;
        for (unsigned i = 0; i <= len; ++i) {
            BivarRatFunc t = render_term(nonzero[pick(rng)]);
            terms.push_back(t);
            scaled.push_back(i % 2 == 0 ? U * t : t / U);
        }
        try {
            if (U * eval_convergents(terms, one) != eval_convergents(scaled, one)) return false;
        } catch (const ZeroDenominator&) {
            continue;  // resample degenerate sequences
        }
        ++done;
    }
    return true;
}

/// Eq. F(p_{2^n-1}/q_{2^n-1}) = p_{2^{n+1}-1}/q_{2^{n+1}-1}, and the r/s twin.
inline bool check_newton_squaring(const PQRS& seq, unsigned n) {
    long lo = (1L << n) - 1, hi = (1L << (n + 1)) - 1;
    BivarRatFunc lhs_pq = newton_map(seq.pq.p_at(lo) / seq.pq.q_at(lo));
    if (lhs_pq != seq.pq.p_at(hi) / seq.pq.q_at(hi)) return false;
    BivarRatFunc lhs_rs = newton_map(seq.rs.p_at(lo) / seq.rs.q_at(lo));
    return lhs_rs == seq.rs.p_at(hi) / seq.rs.q_at(hi);
}

}  // namespace quadcf
