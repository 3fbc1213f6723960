#pragma once

#include <cassert>

namespace rl {

// Absolute precision bound of a truncated series: the first exponent whose
// coefficient is *not* known. Finite, or infinite for exactly known series.
class Prec {
public:
    constexpr Prec(long long v) : v_(v), inf_(false) {}

    static constexpr Prec infinite() { return Prec(0, true); }

    constexpr bool is_infinite() const { return inf_; }
    constexpr bool is_finite() const { return !inf_; }

    constexpr long long value() const {
        assert(!inf_);
        return v_;
    }

    friend constexpr Prec operator+(Prec p, long long d) {
        return p.inf_ ? p : Prec(p.v_ + d);
    }
    friend constexpr Prec operator-(Prec p, long long d) { return p + (-d); }

    friend constexpr bool operator==(Prec a, Prec b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend constexpr bool operator!=(Prec a, Prec b) { return !(a == b); }
    friend constexpr bool operator<(Prec a, Prec b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(Prec a, Prec b) { return a < b || a == b; }
    friend constexpr bool operator>(Prec a, Prec b) { return b < a; }
    friend constexpr bool operator>=(Prec a, Prec b) { return b <= a; }

private:
    constexpr Prec(long long v, bool inf) : v_(v), inf_(inf) {}

    long long v_;
    bool inf_;
};

constexpr Prec min(Prec a, Prec b) { return a < b ? a : b; }
constexpr Prec max(Prec a, Prec b) { return a < b ? b : a; }

// Series coefficients default to this many known terms when an operation on
// exactly known inputs has an infinitely determinable, non-polynomial result
// and the caller supplies no precision cap.
inline constexpr long long default_terms = 16;

} // namespace rl
