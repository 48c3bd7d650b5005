#pragma once

#include <utility>
#include <vector>

#include "quadcf/roots.hpp"

namespace quadcf {

enum class NewtonStartConcrete { AtZero, AtT };

/// Exact Newton orbit of F(X) = (X^2 - u)/(2X - t) in K, from 0 or t.
struct NewtonTrace {
    QuadParams params;
    NewtonStartConcrete start;
    std::vector<FieldElement> iterates;  // F^(0) ... F^(n)

    const FieldElement& last() const { return iterates.back(); }
};

inline NewtonTrace newton_trace(const QuadParams& p, NewtonStartConcrete start, unsigned n) {
    const LatticeKind k = p.kind();
    FieldElement t = FieldElement::from_lattice(p.t());
    FieldElement u = FieldElement::from_lattice(p.u().value());
    FieldElement x = start == NewtonStartConcrete::AtZero ? FieldElement::zero(k) : t;
    NewtonTrace trace{p, start, {x}};
    for (unsigned i = 0; i < n; ++i) {
        FieldElement d = x + x - t;
        if (d.is_zero())
            throw ZeroDerivative("Newton step hit 2X - t = 0 at iterate " + std::to_string(i));
        x = (x * x - u) / d;
        trace.iterates.push_back(x);
    }
    return trace;
}

/// h_0 = t, h_{m+1} = h_m^2 - 2 u^{2^m}, exact in K.
inline std::vector<FieldElement> h_sequence(const QuadParams& p, unsigned n) {
    FieldElement u2 = FieldElement::from_lattice(p.u().value());  // u^{2^m}, squared each step
    std::vector<FieldElement> h{FieldElement::from_lattice(p.t())};
    for (unsigned m = 0; m < n; ++m) {
        h.push_back(h.back() * h.back() - u2.scale(2));
        u2 = u2 * u2;
    }
    return h;
}

/// S_n(t,u) = sum_{m<=n} u^{2^m} / (h_0 ... h_m), exact in K.
inline FieldElement sierpinski_value(const QuadParams& p, unsigned n) {
    std::vector<FieldElement> h = h_sequence(p, n);
    FieldElement u_pow = FieldElement::from_lattice(p.u().value());
    FieldElement prod = FieldElement::one(p.kind());
    FieldElement acc = FieldElement::zero(p.kind());
    for (unsigned m = 0; m <= n; ++m) {
        if (h[m].is_zero())
            throw ZeroTerm("h_" + std::to_string(m) + " = 0 for " + p.str());
        prod = prod * h[m];
        acc = acc + u_pow / prod;
        u_pow = u_pow * u_pow;
    }
    return acc;
}

/**
 * The real comparison data of the convergence bound: growth rate
 * rho = (|t| + sqrt(|t|^2 - 4))/2, the sequence g_0 = |t|,
 * g_{n+1} = g_n^2 - 2, and certified |h_n| enclosures. Requires |t| > 2,
 * which is the exact integer test norm(t) > 4.
 *
 * g_n is rational for n >= 1 (g_1 = |t|^2 - 2), so the comparison
 * |h_n| >= g_n is decided exactly there: norm(h_n) >= g_n^2. For n = 0 it
 * is h_0 = t with g_0 = |t| by definition.
 */
struct GrowthData {
    RatInterval rho;                  // enclosure of the growth rate
    std::vector<RatInterval> g;       // g_0 ... g_N
    std::vector<RatInterval> h_abs;   // |h_0| ... |h_N|
    std::vector<bool> h_ge_g;         // certified |h_n| >= g_n
    std::vector<bool> g_closed_form;  // g_n consistent with rho^{2^n} + rho^{-2^n}
    unsigned bits = 0;

    bool all_certified() const {
        for (bool b : h_ge_g)
            if (!b) return false;
        for (bool b : g_closed_form)
            if (!b) return false;
        return true;
    }
};

inline RatInterval rho_interval(const QuadParams& p, unsigned bits) {
    Rational N(p.t().norm());
    if (N <= 4) throw DomainError("rho requires |t| > 2");
    RatInterval t_abs = sqrt_interval(N, bits);
    RatInterval root = sqrt_interval(N - 4, bits);
    return (t_abs + root) * Rational(1, 2);
}

inline GrowthData growth_data(const QuadParams& p, unsigned N, const PrecisionPolicy& policy) {
    const unsigned bits = policy.initial_bits;
    Rational norm_t(p.t().norm());
    if (norm_t <= 4) throw DomainError("growth_data requires |t| > 2 (norm > 4)");

    if (N > 24) throw DomainError("growth_data: N too large (h_N has ~2^N digits)");

    GrowthData gd;
    gd.bits = bits;
    // raising rho to the 2^N-th power amplifies the enclosure width by
    // ~2^N * rho^(2^N - 1); pad the working precision so the closed-form
    // comparison stays sharp instead of trivially wide
    unsigned rho_bits = std::min(policy.max_bits, bits + 4u * (1u << N) + 32);
    gd.rho = rho_interval(p, rho_bits);

    std::vector<FieldElement> h = h_sequence(p, N);
    // exact rational g_n for n >= 1
    std::vector<Rational> g_exact(N + 1);
    g_exact[0] = 0;  // placeholder; g_0 = |t| is irrational in general
    if (N >= 1) g_exact[1] = norm_t - 2;
    for (unsigned n = 2; n <= N; ++n) g_exact[n] = g_exact[n - 1] * g_exact[n - 1] - 2;

    // rho^{2^n} by repeated squaring with outward dyadic compaction, so the
    // endpoint sizes stay bounded along the chain
    RatInterval rho_pow = gd.rho;
    for (unsigned n = 0; n <= N; ++n) {
        gd.h_abs.push_back(sqrt_interval(h[n].norm(), bits));
        if (n == 0) {
            gd.g.push_back(sqrt_interval(norm_t, bits));
            gd.h_ge_g.push_back(true);  // h_0 = t, g_0 = |t|
        } else {
            gd.g.push_back({g_exact[n], g_exact[n]});
            gd.h_ge_g.push_back(h[n].norm() >= g_exact[n] * g_exact[n]);
        }
        // g_n within the rho^{2^n} + rho^{-2^n} enclosure, up to enclosure width
        RatInterval closed = rho_pow + inv_interval(rho_pow);
        RatInterval gn = gd.g.back();
        gd.g_closed_form.push_back(gn.hi >= closed.lo && gn.lo <= closed.hi);
        if (n < N) rho_pow = round_out(rho_pow * rho_pow, rho_bits);
    }
    return gd;
}

/// One row of the Lemma-7 style bound report: |root - F^(n)(start)| vs
/// 2 / rho^{2^{n+1}-1}, both as certified enclosures.
struct BoundCheckRow {
    unsigned n = 0;
    bool alpha_side = true;
    Rational lhs_upper;  // certified upper bound on the error
    Rational rhs_lower;  // certified lower bound on the budget
    bool pass = false;
    unsigned bits = 0;
};

struct BoundCheckReport {
    QuadParams params;
    std::vector<BoundCheckRow> rows;

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

/**
 * Certified strict inequality |alpha - F^(n)(0)| < 2/rho^{2^{n+1}-1} and the
 * beta mirror, for 1 <= n <= n_max. Params must be L3-admissible. Each row
 * refines until the two enclosures separate; failure to separate at the
 * policy ceiling raises CertificationFailure.
 */
inline BoundCheckReport check_error_bound(const QuadParams& p, unsigned n_max,
                                          const PrecisionPolicy& policy) {
    if (!p.outside(ExclusionLevel::L3))
        throw DomainError("check_error_bound: params must avoid the L3 exclusion set");
    if (n_max < 1) throw DomainError("check_error_bound: n_max >= 1");

    BoundCheckReport report{p, {}};
    NewtonTrace at0 = newton_trace(p, NewtonStartConcrete::AtZero, n_max);
    NewtonTrace att = newton_trace(p, NewtonStartConcrete::AtT, n_max);

    for (unsigned n = 1; n <= n_max; ++n) {
        for (bool alpha_side : {true, false}) {
            const FieldElement& iterate = (alpha_side ? at0 : att).iterates[n];
            BoundCheckRow row;
            row.n = n;
            row.alpha_side = alpha_side;
            for (unsigned bits = policy.initial_bits;; bits *= 2) {
                auto [a, b] = roots_numeric(p, bits);
                Ball root = alpha_side ? a : b;
                Ball diff = root - embed_numeric(iterate, bits);
                Rational lhs_hi = diff.abs_upper(bits);
                RatInterval rho = rho_interval(p, bits);
                long k = (1L << (n + 1)) - 1;
                RatInterval budget = pow_interval(rho, -k) * Rational(2);
                row.lhs_upper = lhs_hi;
                row.rhs_lower = budget.lo;
                row.bits = bits;
                if (lhs_hi < budget.lo) {
                    row.pass = true;
                    break;
                }
                // certified violation: error's lower bound clears the budget
                if (diff.abs_lower(bits) > budget.hi) {
                    row.pass = false;
                    break;
                }
                if (bits >= policy.max_bits)
                    throw CertificationFailure("error bound not separable for " + p.str() +
                                               " at n = " + std::to_string(n));
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace quadcf
