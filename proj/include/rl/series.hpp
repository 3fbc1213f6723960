#pragma once

#include <algorithm>
#include <cassert>
#include <climits>
#include <cstddef>
#include <optional>
#include <ostream>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "prec.hpp"

namespace rl {

// Truncated formal semi-Laurent series over a coefficient field F: finitely
// many negative exponents, coefficients known exactly up to an absolute
// precision bound. A value is in exactly one of three states:
//
//   exact_zero    the zero series, every coefficient certified zero;
//   known         order and a contiguous coefficient window are known, the
//                 leading coefficient is nonzero; prec() == order + #coeffs,
//                 or infinite when the series is exactly a Laurent polynomial
//                 (finite_support(), certified zero beyond the window);
//   zero_to_prec  every coefficient below prec() is certified zero, nothing
//                 is known from prec() on (the order is undetermined).
//
// All operations propagate precision soundly: a reported coefficient never
// depends on any input coefficient at or above that input's precision.
template <CoefficientField F>
class Series {
public:
    enum class Kind { exact_zero, known, zero_to_prec };

    // --- factories ---------------------------------------------------------

    static Series exact_zero() { return Series(); }

    static Series zero_to_prec(long long prec) {
        Series s;
        s.kind_ = Kind::zero_to_prec;
        s.prec_ = Prec(prec);
        return s;
    }

    // Coefficients of z^order .. z^{prec-1}; prec must equal order + #coeffs.
    static Series make(long long order, std::vector<F> coeffs, long long prec) {
        if (prec != order + static_cast<long long>(coeffs.size()))
            throw UsageError("series window must cover exactly [order, prec)");
        return from_window(order, std::move(coeffs), Prec(prec));
    }

    // An exact Laurent polynomial: zero outside the given window.
    static Series polynomial(long long order, std::vector<F> coeffs) {
        return from_window(order, std::move(coeffs), Prec::infinite());
    }

    static Series monomial(F c, long long n) { return polynomial(n, {std::move(c)}); }
    static Series constant(F c) { return monomial(std::move(c), 0); }
    static Series one() { return constant(F(1)); }
    static Series identity() { return monomial(F(1), 1); }

    // Normalizing constructor used by every operation: vals[j] is the
    // coefficient of z^{start+j}, everything below `start` is certified zero.
    // A finite prec must equal start + vals.size(); an infinite prec asserts
    // finite support (certified zero above the window too).
    static Series from_window(long long start, std::vector<F> vals, Prec prec) {
        const bool fs = prec.is_infinite();
        assert(fs || prec.value() == start + static_cast<long long>(vals.size()));
        std::size_t lead = 0;
        while (lead < vals.size() && vals[lead].is_zero()) ++lead;
        if (lead == vals.size()) return fs ? exact_zero() : zero_to_prec(prec.value());
        if (lead > 0) {
            vals.erase(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(lead));
            start += static_cast<long long>(lead);
        }
        if (fs) {
            while (!vals.empty() && vals.back().is_zero()) vals.pop_back();
        }
        Series s;
        s.kind_ = Kind::known;
        s.order_ = start;
        s.coeffs_ = std::move(vals);
        s.prec_ = prec;
        return s;
    }

    // --- observers ---------------------------------------------------------

    Kind kind() const { return kind_; }
    bool is_exact_zero() const { return kind_ == Kind::exact_zero; }
    bool is_known() const { return kind_ == Kind::known; }
    bool is_zero_to_prec() const { return kind_ == Kind::zero_to_prec; }

    long long order() const {
        assert(is_known());
        return order_;
    }

    Prec prec() const { return prec_; }

    // True when every coefficient of the series is certified (an exact
    // Laurent polynomial, or exactly zero).
    bool finite_support() const { return kind_ != Kind::zero_to_prec && prec_.is_infinite(); }

    const std::vector<F>& coeffs() const {
        assert(is_known());
        return coeffs_;
    }

    long long top() const {  // largest exponent in the stored window
        assert(is_known());
        return order_ + static_cast<long long>(coeffs_.size()) - 1;
    }

    bool known_at(long long e) const { return Prec(e) < prec_; }

    // The coefficient of z^e; requires known_at(e).
    F at(long long e) const {
        assert(known_at(e));
        if (kind_ != Kind::known || e < order_) return F(0);
        const long long idx = e - order_;
        if (idx >= static_cast<long long>(coeffs_.size())) return F(0);
        return coeffs_[static_cast<std::size_t>(idx)];
    }

    std::optional<F> coeff_at(long long e) const {
        if (!known_at(e)) return std::nullopt;
        return at(e);
    }

    // First exponent at which a nonzero coefficient may appear. For known
    // series this is the order; for zero_to_prec it is the precision bound.
    long long min_order() const {
        assert(!is_exact_zero());
        return is_known() ? order_ : prec_.value();
    }

    // Structural identity (kind, order, window, precision), not semantic
    // equality; see equal_to_precision for the latter.
    friend bool operator==(const Series& a, const Series& b) {
        if (a.kind_ != b.kind_ || a.prec_ != b.prec_) return false;
        if (a.kind_ != Kind::known) return true;
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    Series() : kind_(Kind::exact_zero), order_(0), prec_(Prec::infinite()) {}

    Kind kind_;
    long long order_;
    std::vector<F> coeffs_;
    Prec prec_;
};

// --- order ------------------------------------------------------------------

struct OrderInfo {
    enum class Tag { finite, infinite, at_least };
    Tag tag;
    long long value;  // the order (finite) or a lower bound (at_least)

    friend bool operator==(const OrderInfo&, const OrderInfo&) = default;
};

template <CoefficientField F>
OrderInfo order_of(const Series<F>& a) {
    switch (a.kind()) {
        case Series<F>::Kind::exact_zero: return {OrderInfo::Tag::infinite, 0};
        case Series<F>::Kind::known: return {OrderInfo::Tag::finite, a.order()};
        default: return {OrderInfo::Tag::at_least, a.prec().value()};
    }
}

// --- precision clamp ----------------------------------------------------------

// Forgets knowledge above `cap`. Exact zero stays exact (no claim is made
// beyond "all zero", which remains true under any cap).
template <CoefficientField F>
Series<F> with_precision(const Series<F>& a, Prec cap) {
    if (cap.is_infinite() || a.is_exact_zero() || a.prec() <= cap) return a;
    const long long p = cap.value();
    if (a.is_zero_to_prec()) return Series<F>::zero_to_prec(p);
    if (p <= a.order()) return Series<F>::zero_to_prec(p);
    std::vector<F> vals;
    vals.reserve(static_cast<std::size_t>(p - a.order()));
    for (long long e = a.order(); e < p; ++e) vals.push_back(a.at(e));
    return Series<F>::from_window(a.order(), std::move(vals), cap);
}

// --- linear operations --------------------------------------------------------

template <CoefficientField F>
Series<F> add(const Series<F>& a, const Series<F>& b) {
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    const Prec p = min(a.prec(), b.prec());
    if (!a.is_known() && !b.is_known()) return Series<F>::zero_to_prec(p.value());
    long long lo = LLONG_MAX;
    if (a.is_known()) lo = std::min(lo, a.order());
    if (b.is_known()) lo = std::min(lo, b.order());
    long long hi;  // window is [lo, hi)
    if (p.is_infinite()) {
        hi = lo;
        if (a.is_known()) hi = std::max(hi, a.top() + 1);
        if (b.is_known()) hi = std::max(hi, b.top() + 1);
    } else {
        hi = p.value();
        if (lo >= hi) return Series<F>::zero_to_prec(p.value());
    }
    std::vector<F> vals;
    vals.reserve(static_cast<std::size_t>(hi - lo));
    for (long long e = lo; e < hi; ++e) vals.push_back(a.at(e) + b.at(e));
    return Series<F>::from_window(lo, std::move(vals), p);
}

template <CoefficientField F>
Series<F> negate(const Series<F>& a) {
    if (!a.is_known()) return a;
    std::vector<F> vals = a.coeffs();
    for (F& c : vals) c = -c;
    return Series<F>::from_window(a.order(), std::move(vals), a.prec());
}

template <CoefficientField F>
Series<F> sub(const Series<F>& a, const Series<F>& b) {
    return add(a, negate(b));
}

// Multiplication by an exactly known scalar. Scaling by zero certifies the
// zero series; over rings with zero divisors the window renormalizes.
template <CoefficientField F>
Series<F> scalar_mul(const F& c, const Series<F>& a) {
    if (c.is_zero()) return Series<F>::exact_zero();
    if (!a.is_known()) return a;
    std::vector<F> vals = a.coeffs();
    for (F& v : vals) v = c * v;
    return Series<F>::from_window(a.order(), std::move(vals), a.prec());
}

// --- multiplication -----------------------------------------------------------

// prec(a*b) = min(prec a + min_order b, prec b + min_order a): perturbing a at
// an exponent >= prec a shifts the product only at exponents >= prec a + ord b.
template <CoefficientField F>
Series<F> mul(const Series<F>& a, const Series<F>& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return Series<F>::exact_zero();
    const long long lo_a = a.min_order(), lo_b = b.min_order();
    const Prec p = min(a.prec() + lo_b, b.prec() + lo_a);
    const long long lo = lo_a + lo_b;
    long long hi;  // window [lo, hi)
    if (p.is_infinite()) {
        hi = a.top() + b.top() + 1;
    } else {
        hi = p.value();
        if (lo >= hi) return Series<F>::zero_to_prec(p.value());
    }
    std::vector<F> vals(static_cast<std::size_t>(hi - lo), F(0));
    if (a.is_known() && b.is_known()) {
        const auto& ac = a.coeffs();
        const auto& bc = b.coeffs();
        for (std::size_t i = 0; i < ac.size(); ++i) {
            if (ac[i].is_zero()) continue;
            const long long ea = a.order() + static_cast<long long>(i);
            for (std::size_t j = 0; j < bc.size(); ++j) {
                const long long e = ea + b.order() + static_cast<long long>(j);
                if (e >= hi) break;
                vals[static_cast<std::size_t>(e - lo)] = vals[static_cast<std::size_t>(e - lo)] + ac[i] * bc[j];
            }
        }
    }
    return Series<F>::from_window(lo, std::move(vals), p);
}

// --- inverse ------------------------------------------------------------------

// Multiplicative inverse: z^{-m} times the inverse of the unit part, computed
// by the standard coefficient recursion. For a series known on [m, P) the
// inverse is determined on [-m, P - 2m). Exact polynomials have infinitely
// determinable inverses; `cap` bounds how much is produced (default_terms
// coefficients when no cap is given).
template <CoefficientField F>
Series<F> inverse_mul(const Series<F>& a, Prec cap = Prec::infinite()) {
    if (!a.is_known())
        throw NotInvertible(a.is_exact_zero() ? "the zero series has no inverse"
                                              : "order undetermined at this precision");
    const F& u0 = a.coeffs().front();
    if (!u0.is_invertible()) throw NotInvertible("leading coefficient is not invertible");
    const long long m = a.order();
    const auto& u = a.coeffs();
    if (a.finite_support() && u.size() == 1)
        return with_precision(Series<F>::monomial(F(1) / u0, -m), cap);
    long long terms;
    if (a.finite_support()) {
        terms = cap.is_finite() ? cap.value() + m : default_terms;
        if (terms < 1) return Series<F>::zero_to_prec(cap.value());
    } else {
        terms = static_cast<long long>(u.size());
    }
    std::vector<F> v(static_cast<std::size_t>(terms), F(0));
    v[0] = F(1) / u0;
    for (long long n = 1; n < terms; ++n) {
        F s(0);
        const long long kmax = std::min<long long>(n, static_cast<long long>(u.size()) - 1);
        for (long long k = 1; k <= kmax; ++k)
            s = s + u[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(n - k)];
        v[static_cast<std::size_t>(n)] = -(s / u0);
    }
    return with_precision(Series<F>::from_window(-m, std::move(v), Prec(-m + terms)), cap);
}

// --- integer powers -----------------------------------------------------------

template <CoefficientField F>
Series<F> int_power(const Series<F>& a, long long n, Prec cap = Prec::infinite()) {
    if (n == 0) {
        if (a.is_exact_zero()) throw ZeroPowerZero("0^0 is undefined");
        return Series<F>::one();  // empty-product convention, also for unknown series
    }
    if (n < 0) {
        if (!a.is_known()) throw NotInvertible("negative power of a non-invertible series");
        Prec inner = cap;
        if (cap.is_finite())
            inner = Prec(cap.value() + (-n - 1) * std::max(a.order(), 0LL));
        return with_precision(int_power(inverse_mul(a, inner), -n), cap);
    }
    // binary powering; the precision of the result matches the n-fold product
    Series<F> acc = Series<F>::one();
    Series<F> base = a;
    long long e = n;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return with_precision(acc, cap);
}

// --- shifts and the standard part ----------------------------------------------

// Multiplication by z^k, an exact operation.
template <CoefficientField F>
Series<F> shift(const Series<F>& a, long long k) {
    switch (a.kind()) {
        case Series<F>::Kind::exact_zero: return a;
        case Series<F>::Kind::zero_to_prec: return Series<F>::zero_to_prec(a.prec().value() + k);
        default: return Series<F>::from_window(a.order() + k, a.coeffs(), a.prec() + k);
    }
}

// The unit factor in a = z^{ord a} * standard_part(a).
template <CoefficientField F>
Series<F> standard_part(const Series<F>& a) {
    if (!a.is_known()) throw Undetermined("standard part needs a determined order");
    return shift(a, -a.order());
}

// --- derivative ---------------------------------------------------------------

template <CoefficientField F>
Series<F> derivative(const Series<F>& a) {
    if (a.is_exact_zero()) return a;
    if (a.is_zero_to_prec()) return Series<F>::zero_to_prec(a.prec().value() - 1);
    std::vector<F> vals;
    vals.reserve(a.coeffs().size());
    for (std::size_t j = 0; j < a.coeffs().size(); ++j)
        vals.push_back(F(a.order() + static_cast<long long>(j)) * a.coeffs()[j]);
    return Series<F>::from_window(a.order() - 1, std::move(vals), a.prec() - 1);
}

// --- comparison up to precision -------------------------------------------------

struct EqualUpTo {
    bool equal;
    Prec prec;  // the common precision the comparison covered
};

// Equality of all coefficients below min(prec a, prec b). With two exactly
// known series this is genuine equality.
template <CoefficientField F>
EqualUpTo equal_to_precision(const Series<F>& a, const Series<F>& b) {
    const Prec p = min(a.prec(), b.prec());
    if (p.is_infinite()) {
        return {a.is_exact_zero() == b.is_exact_zero() &&
                    (a.is_exact_zero() || (a.order() == b.order() && a.coeffs() == b.coeffs())),
                p};
    }
    long long lo = p.value();
    if (a.is_known()) lo = std::min(lo, a.order());
    if (b.is_known()) lo = std::min(lo, b.order());
    for (long long e = lo; e < p.value(); ++e)
        if (!(a.at(e) == b.at(e))) return {false, p};
    return {true, p};
}

// --- m-th roots of unit-order series ---------------------------------------------

namespace detail {

// Dense truncated power series helpers on raw coefficient vectors
// (index == exponent), used by the coefficient recursions.
template <CoefficientField F>
std::vector<F> vec_mul_trunc(const std::vector<F>& x, const std::vector<F>& y, std::size_t n) {
    std::vector<F> r(std::min(n, x.empty() || y.empty() ? std::size_t{0} : x.size() + y.size() - 1),
                     F(0));
    for (std::size_t i = 0; i < x.size() && i < r.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size() && i + j < r.size(); ++j)
            r[i + j] = r[i + j] + x[i] * y[j];
    }
    return r;
}

template <CoefficientField F>
std::vector<F> vec_pow_trunc(std::vector<F> x, long long e, std::size_t n) {
    assert(e >= 0);
    std::vector<F> acc{F(1)};
    while (e > 0) {
        if (e & 1) acc = vec_mul_trunc(acc, x, n);
        e >>= 1;
        if (e > 0) x = vec_mul_trunc(x, x, n);
    }
    return acc;
}

// outer(inner) truncated below z^n; requires inner[0] == 0.
template <CoefficientField F>
std::vector<F> vec_compose_trunc(const std::vector<F>& outer, const std::vector<F>& inner,
                                 std::size_t n) {
    assert(inner.empty() || inner[0].is_zero());
    std::vector<F> r;
    for (std::size_t k = outer.size(); k-- > 0;) {
        r = vec_mul_trunc(r, inner, n);
        if (!outer[k].is_zero()) {
            if (r.empty()) r.push_back(F(0));
            r[0] = r[0] + outer[k];
        }
    }
    return r;
}

template <CoefficientField F>
F vec_at(const std::vector<F>& v, std::size_t i) {
    return i < v.size() ? v[i] : F(0);
}

} // namespace detail

// Solves b^m = a for a series a of order zero, coefficient by coefficient:
// b_0 is an m-th root of a_0 (chosen_root may pin which one), and each later
// b_k is fixed linearly with slope m*b_0^{m-1}. Determined exactly as far as
// a is known.
template <CoefficientField F>
Series<F> mult_root(const Series<F>& a, long long m,
                    std::optional<std::type_identity_t<F>> chosen_root = std::nullopt,
                    Prec cap = Prec::infinite()) {
    if (m < 1) throw UsageError("root index must be positive");
    if (!a.is_known()) throw OrderNotZero("root needs a series of determined order zero");
    if (a.order() != 0) throw OrderNotZero("series order is not zero");
    const F a0 = a.coeffs().front();
    F b0(0);
    if (chosen_root) {
        if (!(field_pow(*chosen_root, m) == a0))
            throw NoRootInField("supplied value is not an m-th root of the constant term");
        b0 = *chosen_root;
    } else {
        auto r = nth_root(a0, static_cast<int>(m));
        if (!r) throw NoRootInField("constant term has no m-th root in the coefficient field");
        b0 = *r;
    }
    const F den = F(m) * field_pow(b0, m - 1);
    if (!den.is_invertible()) throw NoRootInField("root is not separable in this ring");
    long long terms;
    if (a.finite_support()) {
        terms = cap.is_finite() ? cap.value() : default_terms;
        if (terms < 1) return Series<F>::zero_to_prec(cap.value());
    } else {
        terms = static_cast<long long>(a.coeffs().size());
    }
    std::vector<F> b{b0};
    b.reserve(static_cast<std::size_t>(terms));
    for (long long k = 1; k < terms; ++k) {
        const auto pk = detail::vec_pow_trunc(b, m, static_cast<std::size_t>(k) + 1);
        const F ak = a.known_at(k) ? a.at(k) : F(0);  // beyond a polynomial window: exact zero
        b.push_back((ak - detail::vec_at(pk, static_cast<std::size_t>(k))) / den);
    }
    return with_precision(Series<F>::from_window(0, std::move(b), Prec(terms)), cap);
}

// --- operator sugar ---------------------------------------------------------------

template <CoefficientField F>
Series<F> operator+(const Series<F>& a, const Series<F>& b) {
    return add(a, b);
}
template <CoefficientField F>
Series<F> operator-(const Series<F>& a, const Series<F>& b) {
    return sub(a, b);
}
template <CoefficientField F>
Series<F> operator-(const Series<F>& a) {
    return negate(a);
}
template <CoefficientField F>
Series<F> operator*(const Series<F>& a, const Series<F>& b) {
    return mul(a, b);
}
template <CoefficientField F>
Series<F> operator*(const F& c, const Series<F>& a) {
    return scalar_mul(c, a);
}

// --- debug formatting -----------------------------------------------------------

template <CoefficientField F>
std::ostream& operator<<(std::ostream& os, const Series<F>& s) {
    switch (s.kind()) {
        case Series<F>::Kind::exact_zero: return os << "0";
        case Series<F>::Kind::zero_to_prec: return os << "O(z^" << s.prec().value() << ")";
        default: break;
    }
    bool first = true;
    for (std::size_t j = 0; j < s.coeffs().size(); ++j) {
        const F& c = s.coeffs()[j];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const long long e = s.order() + static_cast<long long>(j);
        os << "(" << c << ")";
        if (e != 0) os << "*z^" << e;
    }
    if (s.prec().is_finite()) os << " + O(z^" << s.prec().value() << ")";
    return os;
}

} // namespace rl
