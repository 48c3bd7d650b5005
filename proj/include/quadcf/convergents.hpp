#pragma once

#include <vector>

#include "quadcf/errors.hpp"

namespace quadcf {

/**
 * Two-term convergent recurrence over any exact field-like type F
 * (needs +, *, /, is_zero, and a multiplicative one):
 *   p_n = a_n p_{n-1} + p_{n-2}, q_n likewise,
 *   p_{-2} = 0, p_{-1} = 1, q_{-2} = 1, q_{-1} = 0.
 * Index shift: p[i], q[i] hold the values at n = i - 2.
 */
template <class F>
struct ConvergentTable {
    std::vector<F> p, q;

    const F& p_at(long n) const { return p[static_cast<std::size_t>(n + 2)]; }
    const F& q_at(long n) const { return q[static_cast<std::size_t>(n + 2)]; }
    long max_index() const { return static_cast<long>(p.size()) - 3; }
};

/// terms[0] is a_0. Every q_n (n >= 0) is checked nonzero.
template <class F>
ConvergentTable<F> build_convergents(const std::vector<F>& terms, const F& one) {
    F zero = one - one;
    ConvergentTable<F> t;
    t.p = {zero, one};
    t.q = {one, zero};
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const F& a = terms[i];
        F pn = a * t.p[i + 1] + t.p[i];
        F qn = a * t.q[i + 1] + t.q[i];
        if (qn.is_zero()) throw ZeroDenominator(static_cast<long>(i));
        t.p.push_back(std::move(pn));
        t.q.push_back(std::move(qn));
    }
    return t;
}

/// Value of [a_0; a_1, ..., a_N] as p_N / q_N.
template <class F>
F eval_convergents(const std::vector<F>& terms, const F& one) {
    if (terms.empty()) throw DomainError("empty continued fraction");
    ConvergentTable<F> t = build_convergents(terms, one);
    return t.p.back() / t.q.back();
}

}  // namespace quadcf
