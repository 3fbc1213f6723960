#include <catch2/catch_amalgamated.hpp>

#include <rl/compose.hpp>
#include <rl/rational.hpp>

using rl::Prec;
using rl::Rational;
using S = rl::Series<rl::Rational>;

namespace {

S poly(long long order, std::initializer_list<long long> cs) {
    std::vector<Rational> v;
    for (long long c : cs) v.emplace_back(c);
    return S::polynomial(order, std::move(v));
}

S ser(long long order, std::initializer_list<long long> cs, long long prec) {
    std::vector<Rational> v;
    for (long long c : cs) v.emplace_back(c);
    return S::make(order, std::move(v), prec);
}

S geometric_like(long long order, const Rational& ratio, long long prec) {
    std::vector<Rational> v;
    Rational c(1);
    for (long long e = order; e < prec; ++e, c = c * ratio) v.push_back(c);
    return S::make(order, std::move(v), prec);
}

} // namespace

TEST_CASE("substituting a nonunit power series") {
    // 1/(1-z) composed with z + z^2 gives 1/(1-z-z^2)
    REQUIRE(rl::compose(ser(0, {1, 1, 1, 1}, 4), poly(1, {1, 1})) == ser(0, {1, 1, 2, 3}, 4));
    // negative exponents go through the inverse of f
    REQUIRE(rl::compose(poly(-1, {1}), poly(1, {1, -1}), Prec(5)) ==
            ser(-1, {1, 1, 1, 1, 1, 1}, 5));
    // substituting z is the identity
    const S g = ser(-2, {3, 0, 1, 4}, 2);
    REQUIRE(rl::compose(g, S::identity()) == g);
    // ord(g o f) = ord g * ord f for a nonunit f
    REQUIRE(rl::compose(ser(-2, {1, 1}, 0), poly(2, {1, 1}), Prec(0)).order() == -4);
    REQUIRE(rl::compose(S::zero_to_prec(3), poly(2, {1})) == S::zero_to_prec(6));
    REQUIRE(rl::compose(S::exact_zero(), poly(1, {1, 1})) == S::exact_zero());
}

TEST_CASE("a unit can only be substituted into a finite sum") {
    // z^-1 - 2 + z at 1 - z collapses to z^2/(1-z)
    const S g = poly(-1, {1, -2, 1});
    const S f = poly(0, {1, -1});
    REQUIRE(rl::compose(g, f, Prec(10)) == ser(2, {1, 1, 1, 1, 1, 1, 1, 1}, 10));
    // ord(g o f) = 2 even though ord g * ord f = 0: the order law needs a nonunit f
    REQUIRE(rl::compose(g, f, Prec(10)).order() == 2);
    REQUIRE_THROWS_AS(rl::compose(ser(-1, {1, -2, 1, 0}, 3), f), rl::CompositionUndefined);
    REQUIRE_THROWS_AS(rl::compose(S::zero_to_prec(0), f), rl::CompositionUndefined);
    // a constant composed with anything is itself
    REQUIRE(rl::compose(poly(0, {7}), f) == poly(0, {7}));
}

TEST_CASE("substituting zero and undetermined inner series") {
    REQUIRE(rl::compose(ser(0, {5, 3}, 2), S::exact_zero()) == poly(0, {5}));
    REQUIRE(rl::compose(poly(1, {3}), S::exact_zero()) == S::exact_zero());
    REQUIRE(rl::compose(S::zero_to_prec(1), S::exact_zero()) == S::exact_zero());
    REQUIRE(rl::compose(S::zero_to_prec(0), S::exact_zero()) == S::zero_to_prec(0));
    REQUIRE_THROWS_AS(rl::compose(poly(-1, {1}), S::exact_zero()), rl::NotInvertible);
    REQUIRE_THROWS_AS(rl::compose(S::zero_to_prec(-1), S::exact_zero()), rl::NotInvertible);
    // f known only to be O(z^2): low-degree output coefficients survive
    REQUIRE(rl::compose(ser(0, {2, 3, 0, 0, 0}, 5), S::zero_to_prec(2)) == ser(0, {2, 0}, 2));
    REQUIRE_THROWS_AS(rl::compose(poly(-1, {1}), S::zero_to_prec(2)), rl::NotInvertible);
    REQUIRE_THROWS_AS(rl::compose(poly(0, {1, 1}), S::zero_to_prec(-1)),
                      rl::CompositionUndefined);
    REQUIRE(rl::compose(poly(0, {7}), S::zero_to_prec(0)) == poly(0, {7}));
    REQUIRE(rl::compose(poly(1, {1, 1}), S::zero_to_prec(0)) == S::zero_to_prec(0));
}

TEST_CASE("compositional inverse") {
    // z/(1-z) inverts to z/(1+z)
    REQUIRE(rl::comp_inverse(ser(1, {1, 1, 1, 1, 1}, 6)) == ser(1, {1, -1, 1, -1, 1}, 6));
    REQUIRE(rl::comp_inverse(poly(1, {1, 1}), Prec(6)) == ser(1, {1, -1, 2, -5, 14}, 6));
    const S f = ser(1, {2, -1, 3, 5}, 5);
    REQUIRE(equal_to_precision(rl::compose(f, rl::comp_inverse(f)), S::identity()).equal);
    REQUIRE(equal_to_precision(rl::compose(rl::comp_inverse(f), f), S::identity()).equal);
    REQUIRE_THROWS_AS(rl::comp_inverse(poly(2, {1})), rl::OrderNotOne);
    REQUIRE_THROWS_AS(rl::comp_inverse(poly(0, {1, 1})), rl::OrderNotOne);
    REQUIRE_THROWS_AS(rl::comp_inverse(S::zero_to_prec(2)), rl::OrderNotOne);
    REQUIRE_THROWS_AS(rl::comp_inverse(S::exact_zero()), rl::OrderNotOne);
}

TEST_CASE("compositional iteration") {
    const S f = poly(1, {1, 1});
    REQUIRE(rl::iterate(f, 0) == S::identity());
    REQUIRE(rl::iterate(f, 1) == f);
    REQUIRE(rl::iterate(f, 2) == poly(1, {1, 2, 2, 1}));
    REQUIRE_THROWS_AS(rl::iterate(poly(2, {1}), 2), rl::OrderNotOne);
    REQUIRE_THROWS_AS(rl::iterate(f, -1), rl::UsageError);
}

TEST_CASE("compositional roots of the homographic family") {
    // z/(1-tz) iterates additively in t, so roots just divide t
    const S f = geometric_like(1, Rational(1), 6);  // z/(1-z)
    REQUIRE(rl::iter_sqrt(f) == geometric_like(1, Rational(1, 2), 6));
    REQUIRE(rl::iter_root(f, 3) == geometric_like(1, Rational(1, 3), 6));
    REQUIRE(rl::iter_root(f, 2) == rl::iter_sqrt(f));
    REQUIRE(rl::iter_root(f, 1) == f);
    // generic root composes back to f
    const S h = ser(1, {1, 3, -2, 1, 7}, 6);
    for (long long n : {2LL, 3LL, 4LL}) {
        const S r = rl::iter_root(h, n);
        REQUIRE(equal_to_precision(rl::iterate(r, n), h).equal);
        REQUIRE(r.prec() == h.prec());
    }
    REQUIRE(rl::iter_sqrt(h) == rl::iter_root(h, 2));
    REQUIRE_THROWS_AS(rl::iter_sqrt(ser(1, {2, 1}, 3)), rl::NotTangentToIdentity);
    REQUIRE_THROWS_AS(rl::iter_root(ser(1, {2, 1}, 3), 3), rl::NotTangentToIdentity);
    REQUIRE_THROWS_AS(rl::iter_sqrt(poly(0, {1, 1})), rl::OrderNotOne);
}
