#pragma once

#include <utility>

#include "dual.hpp"
#include "riordan.hpp"

namespace rl {

namespace detail {

template <CoefficientField F>
bool vanishing_constant_fps(const Series<F>& s) {
    // certified: [z^0] = 0 and no negative exponents
    if (s.is_exact_zero()) return true;
    if (s.is_zero_to_prec()) return s.prec().value() >= 1;
    return s.order() >= 1;
}

template <CoefficientField F>
bool certified_fps(const Series<F>& s) {
    if (s.is_exact_zero()) return true;
    if (s.is_zero_to_prec()) return s.prec().value() >= 0;
    return s.order() >= 0;
}

} // namespace detail

// A tangent vector to the group: gamma perturbs the generating series (any
// semi-Laurent direction), kappa perturbs the multiplier and must keep its
// order >= 1, i.e. [z^0] kappa = 0.
template <CoefficientField F>
struct TangentPair {
    Series<F> gamma;
    Series<F> kappa;

    TangentPair(Series<F> g, Series<F> k) : gamma(std::move(g)), kappa(std::move(k)) {
        if (!detail::vanishing_constant_fps(kappa))
            throw InvalidTangent("kappa must vanish to order one");
    }
};

// First-order differential operator h -> chi*h + alpha*h' acting on power
// series, with alpha vanishing at zero.
template <CoefficientField F>
struct ClassicalOperator {
    Series<F> chi;
    Series<F> alpha;

    ClassicalOperator(Series<F> c, Series<F> a) : chi(std::move(c)), alpha(std::move(a)) {
        if (!detail::certified_fps(chi))
            throw UsageError("operator coefficient must be a power series");
        if (!detail::vanishing_constant_fps(alpha))
            throw InvalidTangent("derivative coefficient must vanish to order one");
    }
};

// Directional derivative of g o h in the substitution slot: (g' o h) * chi.
template <CoefficientField F>
Series<F> dcompose(const Series<F>& g, const Series<F>& h, const Series<F>& chi,
                   Prec cap = Prec::infinite()) {
    return mul(compose(derivative(g), h, cap), chi);
}

// Derivative of the group product through both factors: the product curve
// (f + t*phi, h + t*chi) * (g + t*gamma, k + t*kappa) at t = 0.
template <CoefficientField F>
std::pair<RiordanArray<F>, TangentPair<F>> tangent_mul(const RiordanArray<F>& base1,
                                                       const TangentPair<F>& v1,
                                                       const RiordanArray<F>& base2,
                                                       const TangentPair<F>& v2,
                                                       Prec cap = Prec::infinite()) {
    const Series<F>& f = base1.g();
    const Series<F>& h = base1.f();
    const Series<F>& g = base2.g();
    const Series<F>& k = base2.f();
    Series<F> gamma = add(add(mul(v1.gamma, compose(g, h, cap)), mul(f, compose(v2.gamma, h, cap))),
                          mul(f, dcompose(g, h, v1.kappa, cap)));
    Series<F> kappa = add(dcompose(k, h, v1.kappa, cap), compose(v2.kappa, h, cap));
    return {rmul(base1, base2, cap), TangentPair<F>(std::move(gamma), std::move(kappa))};
}

// Pushforward of a tangent vector at the identity by left translation along
// `base`: the derivative at t = 0 of base * (1 + t*gamma, z + t*kappa).
template <CoefficientField F>
TangentPair<F> left_translate(const RiordanArray<F>& base, const TangentPair<F>& v,
                              Prec cap = Prec::infinite()) {
    return TangentPair<F>(mul(base.g(), compose(v.gamma, base.f(), cap)),
                          compose(v.kappa, base.f(), cap));
}

// Lie bracket on tangent vectors at the identity.
template <CoefficientField F>
TangentPair<F> bracket(const TangentPair<F>& v1, const TangentPair<F>& v2) {
    Series<F> gamma =
        sub(mul(derivative(v2.gamma), v1.kappa), mul(derivative(v1.gamma), v2.kappa));
    Series<F> kappa =
        sub(mul(derivative(v2.kappa), v1.kappa), mul(derivative(v1.kappa), v2.kappa));
    return TangentPair<F>(std::move(gamma), std::move(kappa));
}

// The substitution-part bracket alone.
template <CoefficientField F>
Series<F> bracket_x(const Series<F>& k1, const Series<F>& k2) {
    return sub(mul(derivative(k2), k1), mul(derivative(k1), k2));
}

// Derivation attached to kappa: gamma -> kappa * gamma'.
template <CoefficientField F>
Series<F> psi_der(const Series<F>& kappa, const Series<F>& gamma) {
    return mul(kappa, derivative(gamma));
}

template <CoefficientField F>
Series<F> apply_operator(const ClassicalOperator<F>& op, const Series<F>& h) {
    return add(mul(op.chi, h), mul(op.alpha, derivative(h)));
}

// Commutator [L1, L2] = L1 L2 - L2 L1 of first-order operators, again first
// order: the coefficients follow the same bracket shape as tangent pairs.
template <CoefficientField F>
ClassicalOperator<F> classical_bracket(const ClassicalOperator<F>& l1,
                                       const ClassicalOperator<F>& l2) {
    Series<F> chi = sub(mul(derivative(l2.chi), l1.alpha), mul(derivative(l1.chi), l2.alpha));
    Series<F> alpha = sub(mul(l1.alpha, derivative(l2.alpha)), mul(l2.alpha, derivative(l1.alpha)));
    return ClassicalOperator<F>(std::move(chi), std::move(alpha));
}

// --- dual-number lifts ---------------------------------------------------------

// Lifting a series pointwise into dual numbers; combine(a, b) = a + eps*b is
// the first-order jet used to differentiate whole computations exactly.
template <CoefficientField F>
Series<Dual<F>> to_dual(const Series<F>& a) {
    using D = Dual<F>;
    switch (a.kind()) {
        case Series<F>::Kind::exact_zero: return Series<D>::exact_zero();
        case Series<F>::Kind::zero_to_prec: return Series<D>::zero_to_prec(a.prec().value());
        default: break;
    }
    std::vector<D> vals;
    vals.reserve(a.coeffs().size());
    for (const F& c : a.coeffs()) vals.emplace_back(c, F(0));
    return Series<D>::from_window(a.order(), std::move(vals), a.prec());
}

template <CoefficientField F>
Series<Dual<F>> dual_combine(const Series<F>& a, const Series<F>& b) {
    return add(to_dual(a), scalar_mul(Dual<F>::eps(), to_dual(b)));
}

template <CoefficientField F>
Series<F> real_part(const Series<Dual<F>>& a) {
    using D = Dual<F>;
    switch (a.kind()) {
        case Series<D>::Kind::exact_zero: return Series<F>::exact_zero();
        case Series<D>::Kind::zero_to_prec: return Series<F>::zero_to_prec(a.prec().value());
        default: break;
    }
    std::vector<F> vals;
    vals.reserve(a.coeffs().size());
    for (const D& c : a.coeffs()) vals.push_back(c.real());
    return Series<F>::from_window(a.order(), std::move(vals), a.prec());
}

template <CoefficientField F>
Series<F> infinitesimal_part(const Series<Dual<F>>& a) {
    using D = Dual<F>;
    switch (a.kind()) {
        case Series<D>::Kind::exact_zero: return Series<F>::exact_zero();
        case Series<D>::Kind::zero_to_prec: return Series<F>::zero_to_prec(a.prec().value());
        default: break;
    }
    std::vector<F> vals;
    vals.reserve(a.coeffs().size());
    for (const D& c : a.coeffs()) vals.push_back(c.infinitesimal());
    return Series<F>::from_window(a.order(), std::move(vals), a.prec());
}

} // namespace rl
