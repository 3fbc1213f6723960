#pragma once

#include <optional>
#include <ostream>

#include "errors.hpp"
#include "field.hpp"

namespace rl {

// Dual numbers a + b*eps with eps^2 = 0 over a coefficient field F. They form
// a commutative ring with zero divisors: a + b*eps is invertible iff a is.
// Used to differentiate exactly through whole series computations.
template <CoefficientField F>
class Dual {
public:
    Dual() : a_(0), b_(0) {}
    Dual(long long n) : a_(n), b_(0) {}
    Dual(F real, F eps) : a_(std::move(real)), b_(std::move(eps)) {}

    static Dual eps() { return Dual(F(0), F(1)); }

    const F& real() const { return a_; }
    const F& infinitesimal() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_invertible() const { return a_.is_invertible(); }

    friend Dual operator+(const Dual& x, const Dual& y) { return Dual(x.a_ + y.a_, x.b_ + y.b_); }
    friend Dual operator-(const Dual& x, const Dual& y) { return Dual(x.a_ - y.a_, x.b_ - y.b_); }
    friend Dual operator-(const Dual& x) { return Dual(-x.a_, -x.b_); }
    friend Dual operator*(const Dual& x, const Dual& y) {
        return Dual(x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend Dual operator/(const Dual& x, const Dual& y) {
        if (!y.is_invertible()) throw DivisionByZero("dual divisor has zero real part");
        F q = x.a_ / y.a_;
        return Dual(q, (x.b_ - q * y.b_) / y.a_);
    }

    friend bool operator==(const Dual& x, const Dual& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const Dual& x) {
        return os << x.a_ << "+" << x.b_ << "E";
    }

private:
    F a_, b_;
};

// (r + s*eps)^m = a + b*eps forces r^m = a and s = b*r/(m*a); solvable exactly
// iff the real part has an exact root and is invertible (or x is zero).
template <CoefficientField F>
std::optional<Dual<F>> nth_root(const Dual<F>& x, int m) {
    if (m < 1) throw UsageError("root index must be positive");
    if (m == 1) return x;
    if (x.is_zero()) return Dual<F>(0);
    if (!x.real().is_invertible()) return std::nullopt;
    auto r = nth_root(x.real(), m);
    if (!r) return std::nullopt;
    F s = x.infinitesimal() * *r / (F(m) * x.real());
    return Dual<F>(*r, s);
}

} // namespace rl
