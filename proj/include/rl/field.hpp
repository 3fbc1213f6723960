#pragma once

#include <cassert>
#include <concepts>
#include <optional>

namespace rl {

// Coefficient domain for series. Modeled by exact rationals and by dual
// numbers over them; the latter have zero divisors, which is why
// `is_invertible` exists separately from `is_zero`. Division requires an
// invertible divisor. `nth_root(x, m)` returns an exact m-th root when one
// exists in the domain.
template <class F>
concept CoefficientField =
    std::regular<F> && requires(const F a, const F b, long long n, int m) {
        { F(n) } -> std::same_as<F>;
        { a + b } -> std::same_as<F>;
        { a - b } -> std::same_as<F>;
        { -a } -> std::same_as<F>;
        { a * b } -> std::same_as<F>;
        { a / b } -> std::same_as<F>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { a.is_invertible() } -> std::convertible_to<bool>;
        { nth_root(a, m) } -> std::same_as<std::optional<F>>;
    };

template <CoefficientField F>
F field_pow(F base, long long e) {
    assert(e >= 0);
    F acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace rl
