#pragma once

#include <algorithm>
#include <vector>

#include "series.hpp"

namespace rl {

// Substitution g(f(z)) for a semi-Laurent g. Negative exponents of g turn
// into powers of 1/f, nonnegative ones are folded by Horner's rule, and the
// unknown tail of g contributes nothing below prec(g) * ord(f). Defined when
// f is a nonunit formal power series, or when f is a unit and g is an exact
// Laurent polynomial (a unit substituted into an infinite sum has unbounded
// contributions at every exponent).
template <CoefficientField F>
Series<F> compose(const Series<F>& g, const Series<F>& f, Prec cap = Prec::infinite()) {
    using S = Series<F>;
    if (g.is_exact_zero()) return S::exact_zero();

    if (f.is_exact_zero()) {
        // substituting zero keeps only the constant term
        if (g.is_known()) {
            if (g.order() < 0) throw NotInvertible("zero has no negative powers");
            return g.order() == 0 ? S::constant(g.at(0)) : S::exact_zero();
        }
        const long long q = g.prec().value();
        if (q <= -1) throw NotInvertible("possibly nonzero negative exponents meet zero");
        return q == 0 ? S::zero_to_prec(0) : S::exact_zero();
    }

    if (f.is_zero_to_prec()) {
        const long long p = f.prec().value();
        if (p < 0) throw CompositionUndefined("inner series is not a formal power series");
        const bool g_neg = (g.is_known() && g.order() < 0) ||
                           (g.is_zero_to_prec() && g.prec().value() < 0);
        if (g_neg) throw NotInvertible("cannot invert an inner series of undetermined order");
        if (p == 0) {
            // f could still be a unit; only a constant g composes determinately
            if (g.is_known() && g.finite_support() && g.order() == 0 && g.coeffs().size() == 1)
                return g;
            if (g.is_known() && g.finite_support()) return S::zero_to_prec(0);
            if (g.is_known() || g.is_zero_to_prec()) return S::zero_to_prec(0);
        }
        S acc = S::exact_zero();
        if (g.is_known()) {
            if (g.order() == 0) acc = S::constant(g.at(0));
            S pw = S::one();
            const long long hi = g.prec().is_finite() ? g.prec().value() : g.top() + 1;
            for (long long n = 1; n < hi; ++n) {
                pw = mul(pw, f);  // stays a certified-zero prefix, prec n*p
                const F c = g.known_at(n) ? g.at(n) : F(0);
                if (!c.is_zero()) acc = add(acc, scalar_mul(c, pw));
            }
        }
        if (!g.finite_support()) {
            const long long qg = g.prec().value();  // >= 0 here
            acc = add(acc, S::zero_to_prec(qg * p));
        }
        return with_precision(acc, cap);
    }

    const long long r = f.order();
    if (r < 0) throw CompositionUndefined("inner series is not a formal power series");

    if (r == 0) {
        if (!g.finite_support())
            throw CompositionUndefined("unit substitution requires finite support");
        // finite sum over the polynomial window of g
        S acc = S::exact_zero();
        if (g.order() < 0) {
            const S finv = inverse_mul(f, cap);  // ord 1/f = 0, powers keep the cap
            S pw = finv;
            for (long long k = 1; k <= -g.order(); ++k) {
                if (k > 1) pw = mul(pw, finv);
                const F c = g.at(-k);
                if (!c.is_zero()) acc = add(acc, scalar_mul(c, pw));
            }
        }
        const long long hi = g.top();
        if (hi >= 0) {
            S h = S::exact_zero();
            for (long long n = hi; n >= 0; --n) {
                h = mul(h, f);
                const F c = g.at(n);
                if (!c.is_zero()) h = add(h, S::constant(c));
            }
            acc = add(acc, h);
        }
        return with_precision(acc, cap);
    }

    // main case: f a known nonunit power series, ord f = r >= 1
    // Nothing above the result's own precision is reportable, so internal
    // arithmetic may be truncated there; this keeps exact inner series from
    // ballooning when the outer one is truncated anyway.
    Prec eff = cap;
    if (!g.finite_support()) {
        const long long tail = g.prec().value() * r;
        if (!eff.is_finite() || tail < eff.value()) eff = Prec(tail);
    }
    S acc = S::exact_zero();
    if (g.is_known()) {
        if (g.order() < 0) {
            const long long deepest = -g.order();
            const Prec icap = eff.is_finite() ? Prec(eff.value() + (deepest - 1) * r) : eff;
            const S finv = inverse_mul(f, icap);
            S pw = finv;
            for (long long k = 1; k <= deepest; ++k) {
                if (k > 1) pw = mul(pw, finv);
                // coefficients beyond prec(g) are covered by the tail term below
                const F c = g.known_at(-k) ? g.at(-k) : F(0);
                if (!c.is_zero()) acc = add(acc, scalar_mul(c, pw));
            }
        }
        const long long hi_excl = g.prec().is_finite() ? g.prec().value() : g.top() + 1;
        if (hi_excl > 0) {
            const long long base = std::max(g.order(), 0LL);
            S h = S::exact_zero();
            for (long long n = hi_excl - 1; n >= base; --n) {
                h = with_precision(mul(h, f), eff);
                const F c = g.known_at(n) ? g.at(n) : F(0);
                if (!c.is_zero()) h = add(h, S::constant(c));
            }
            if (base > 0) h = with_precision(mul(h, int_power(f, base, eff)), eff);
            acc = add(acc, h);
        }
    }
    if (!g.finite_support()) {
        const long long qg = g.prec().value();
        acc = add(acc, S::zero_to_prec(qg * r));  // tail of g starts contributing at qg * r
    }
    return with_precision(acc, cap);
}

// --- compositional inverse ------------------------------------------------------

// The series w with f(w(z)) = z = w(f(z)), for f of order exactly one with an
// invertible linear coefficient. Coefficients are fixed one degree at a time:
// substituting a tentative w + t z^k into f moves the degree-k coefficient
// linearly in t with slope f_1.
template <CoefficientField F>
Series<F> comp_inverse(const Series<F>& f, Prec cap = Prec::infinite()) {
    if (!f.is_known() || f.order() != 1)
        throw OrderNotOne("compositional inverse needs order exactly one");
    const F f1 = f.coeffs().front();
    if (!f1.is_invertible()) throw NotInvertible("linear coefficient is not invertible");
    long long terms;  // number of coefficients of the result, exponents 1..terms
    if (f.finite_support()) {
        terms = cap.is_finite() ? cap.value() - 1 : default_terms;
        if (terms < 1) return Series<F>::zero_to_prec(cap.is_finite() ? cap.value() : 1);
    } else {
        terms = static_cast<long long>(f.coeffs().size());
    }
    // dense copy of f on [0, terms], exponent == index
    std::vector<F> fd(static_cast<std::size_t>(terms) + 1, F(0));
    for (long long e = 1; e <= terms; ++e)
        fd[static_cast<std::size_t>(e)] = f.known_at(e) ? f.at(e) : F(0);
    std::vector<F> w(static_cast<std::size_t>(terms) + 1, F(0));
    w[1] = F(1) / f1;
    for (long long k = 2; k <= terms; ++k) {
        const auto comp = detail::vec_compose_trunc(fd, w, static_cast<std::size_t>(k) + 1);
        w[static_cast<std::size_t>(k)] = -(detail::vec_at(comp, static_cast<std::size_t>(k)) / f1);
    }
    w.erase(w.begin());
    return with_precision(Series<F>::from_window(1, std::move(w), Prec(terms + 1)), cap);
}

// --- compositional iteration and roots --------------------------------------------

// m-fold self-composition of a series of order one; m = 0 gives z.
template <CoefficientField F>
Series<F> iterate(const Series<F>& f, long long m, Prec cap = Prec::infinite()) {
    if (m < 0) throw UsageError("iteration count must be nonnegative");
    if (!f.is_known() || f.order() != 1) throw OrderNotOne("iteration needs order exactly one");
    if (m == 0) return Series<F>::identity();
    Series<F> acc = with_precision(f, cap);
    for (long long i = 2; i <= m; ++i) acc = compose(f, acc, cap);
    return acc;
}

namespace detail {

template <CoefficientField F>
long long root_terms(const Series<F>& f, Prec cap) {
    if (!f.finite_support()) return static_cast<long long>(f.coeffs().size());
    return cap.is_finite() ? std::max<long long>(cap.value() - 1, 1) : default_terms;
}

} // namespace detail

// Compositional square root: the g with g(g(z)) = f(z), for f tangent to the
// identity (ord f = 1, f_1 = 1). Writing g = z + ..., the degree-(n+1)
// coefficient satisfies f_{n+1} = 2 g_{n+1} + sum_{i=2}^{n} g_i (g^i)_{n+1},
// which the loop solves directly.
template <CoefficientField F>
Series<F> iter_sqrt(const Series<F>& f, Prec cap = Prec::infinite()) {
    if (!f.is_known() || f.order() != 1) throw OrderNotOne("square root needs order exactly one");
    if (!(f.coeffs().front() == F(1)))
        throw NotTangentToIdentity("square root needs linear coefficient one");
    const long long terms = detail::root_terms(f, cap);
    std::vector<F> g(static_cast<std::size_t>(terms) + 1, F(0));
    g[1] = F(1);
    for (long long k = 2; k <= terms; ++k) {
        F s(0);
        std::vector<F> pw = detail::vec_mul_trunc(g, g, static_cast<std::size_t>(k) + 1);
        for (long long i = 2; i <= k - 1; ++i) {
            if (!g[static_cast<std::size_t>(i)].is_zero())
                s = s + g[static_cast<std::size_t>(i)] *
                            detail::vec_at(pw, static_cast<std::size_t>(k));
            if (i + 1 <= k - 1) pw = detail::vec_mul_trunc(pw, g, static_cast<std::size_t>(k) + 1);
        }
        const F fk = f.known_at(k) ? f.at(k) : F(0);
        g[static_cast<std::size_t>(k)] = (fk - s) / F(2);
    }
    g.erase(g.begin());
    return with_precision(Series<F>::from_window(1, std::move(g), Prec(terms + 1)), cap);
}

// Compositional n-th root: F with F composed with itself n times equal to f,
// again for f tangent to the identity. Undetermined coefficients: with the
// first k-1 coefficients of F fixed and F_k tentative, the degree-k
// coefficient of the n-fold composite is (known part) + n * F_k.
template <CoefficientField F>
Series<F> iter_root(const Series<F>& f, long long n, Prec cap = Prec::infinite()) {
    if (n < 1) throw UsageError("root index must be positive");
    if (!f.is_known() || f.order() != 1)
        throw OrderNotOne("compositional root needs order exactly one");
    if (!(f.coeffs().front() == F(1)))
        throw NotTangentToIdentity("compositional root needs linear coefficient one");
    if (n == 1) return with_precision(f, cap);
    const long long terms = detail::root_terms(f, cap);
    std::vector<F> w(static_cast<std::size_t>(terms) + 1, F(0));
    w[1] = F(1);
    for (long long k = 2; k <= terms; ++k) {
        std::vector<F> cur = w;
        for (long long i = 2; i <= n; ++i)
            cur = detail::vec_compose_trunc(w, cur, static_cast<std::size_t>(k) + 1);
        const F fk = f.known_at(k) ? f.at(k) : F(0);
        w[static_cast<std::size_t>(k)] =
            (fk - detail::vec_at(cur, static_cast<std::size_t>(k))) / F(n);
    }
    w.erase(w.begin());
    return with_precision(Series<F>::from_window(1, std::move(w), Prec(terms + 1)), cap);
}

} // namespace rl
