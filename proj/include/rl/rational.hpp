#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace rl {

// Arbitrary-precision rational, always kept in canonical form (gcd 1,
// positive denominator). Thin value wrapper around GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long num, long long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with arbitrarily large components.
    static Rational parse(std::string_view text) {
        mpq_class v;
        if (text.empty() || v.set_str(std::string(text), 10) != 0)
            throw ParseError("bad rational literal '" + std::string(text) + "'");
        if (v.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        v.canonicalize();
        Rational r;
        r.v_ = v;
        return r;
    }

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_invertible() const { return !is_zero(); }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator-(const Rational& a) { return wrap(-a.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("rational division by zero");
        return wrap(a.v_ / b.v_);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational wrap(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

// Exact m-th root when it exists: numerator and denominator must both be
// perfect m-th powers, and negative values only admit odd-order roots.
inline std::optional<Rational> nth_root(const Rational& x, int m) {
    if (m < 1) throw UsageError("root index must be positive");
    if (m == 1) return x;
    if (x.is_zero()) return Rational(0);
    mpz_class num = x.raw().get_num();
    mpz_class den = x.raw().get_den();
    const bool neg = sgn(num) < 0;
    if (neg && m % 2 == 0) return std::nullopt;
    mpz_class anum = abs(num);
    mpz_class rnum, rden;
    const bool exact_num = mpz_root(rnum.get_mpz_t(), anum.get_mpz_t(), m) != 0;
    const bool exact_den = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), m) != 0;
    if (!exact_num || !exact_den) return std::nullopt;
    if (neg) rnum = -rnum;
    return Rational(mpq_class(rnum) / mpq_class(rden));
}

} // namespace rl
