#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <rl/rational.hpp>
#include <rl/riordan.hpp>

using rl::Prec;
using rl::Rational;
using S = rl::Series<rl::Rational>;
using R = rl::RiordanArray<rl::Rational>;

static S poly(long long order, std::initializer_list<Rational> cs) {
    return S::polynomial(order, std::vector<Rational>(cs));
}

static S ser(long long order, std::initializer_list<Rational> cs, long long prec) {
    return S::make(order, std::vector<Rational>(cs), prec);
}

static S geometric(long long order, long long terms, Rational ratio = Rational(1)) {
    std::vector<Rational> v;
    Rational c(1);
    for (long long i = 0; i < terms; ++i) {
        v.push_back(c);
        c = c * ratio;
    }
    return S::make(order, std::move(v), order + terms);
}

// (1/(1-z), z/(1-z)): the binomial-coefficient array
static R pascal(long long terms = 10) {
    return R(geometric(0, terms), geometric(1, terms));
}

static Rational binom(long long m, long long n) {
    if (n < 0 || n > m) return Rational(0);
    Rational v(1);
    for (long long i = 0; i < n; ++i) v = v * Rational(m - i) / Rational(i + 1);
    return v;
}

TEST_CASE("construction guards") {
    REQUIRE_THROWS_AS(R(S::exact_zero(), S::identity()), rl::InvalidGeneratingSeries);
    REQUIRE_THROWS_AS(R(S::zero_to_prec(3), S::identity()), rl::InvalidGeneratingSeries);
    REQUIRE_THROWS_AS(R(S::one(), poly(0, {1, 1})), rl::InvalidF);
    REQUIRE_THROWS_AS(R(S::one(), poly(2, {1})), rl::InvalidF);
    const R id = R::identity();
    REQUIRE(id.g() == S::one());
    REQUIRE(id.f() == S::identity());
    REQUIRE(pascal().order_zero());
    REQUIRE(pascal().tangent_multiplier());
    REQUIRE(R(poly(-2, {1}), poly(1, {2})).diag_offset() == -2);
    REQUIRE_FALSE(R(poly(0, {1}), poly(1, {2})).tangent_multiplier());
}

TEST_CASE("binomial entries and windows") {
    const R p = pascal();
    for (long long m = 0; m <= 7; ++m)
        for (long long n = 0; n <= 7; ++n) {
            const auto e = rl::entry(p, m, n);
            REQUIRE(e.has_value());
            REQUIRE(*e == binom(m, n));
        }
    // column -1 is g * f^{-1} = 1/z exactly
    REQUIRE(rl::entry(p, -1, -1) == Rational(1));
    REQUIRE(rl::entry(p, 0, -1) == Rational(0));
    const auto w = rl::window(p, 0, 5, 0, 5);
    REQUIRE(w.rows() == 6);
    for (long long m = 0; m <= 5; ++m)
        for (long long n = 0; n <= 5; ++n) {
            REQUIRE(w.at(m, n).known);
            REQUIRE(w.at(m, n).value == binom(m, n));
            REQUIRE(w.structural_zero(m, n) == (m < n));
        }
}

TEST_CASE("semi-Laurent window golden block") {
    // g = z^-3 + z^-2 + ... (six known coefficients), f = z + z^2 + ...
    const R r(geometric(-3, 6), geometric(1, 6));
    REQUIRE(r.diag_offset() == -3);
    const auto w = rl::window(r, -5, 0, -2, 3);
    const long long want[6][6] = {
        {1, 0, 0, 0, 0, 0},
        {-1, 1, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {0, 0, 1, 1, 0, 0},
        {0, 0, 1, 2, 1, 0},
        {0, 0, 1, 3, 3, 1},
    };
    for (long long m = -5; m <= 0; ++m)
        for (long long n = -2; n <= 3; ++n) {
            const auto& cell = w.at(m, n);
            REQUIRE(cell.known);
            REQUIRE(cell.value == Rational(want[m + 5][n + 2]));
        }
}

TEST_CASE("product, inverse, and the group identity") {
    const R p = pascal();
    const R pp = rl::rmul(p, p);
    // closed form (1/(1-2z), z/(1-2z)): entries binom(m,n) * 2^(m-n)
    REQUIRE(rl::entry(pp, 4, 2) == Rational(24));
    REQUIRE(rl::equal_to_precision(pp.g(), geometric(0, 10, Rational(2))).equal);
    REQUIRE(rl::equal_to_precision(pp.f(), geometric(1, 10, Rational(2))).equal);

    const R pinv = rl::rinverse(p);
    REQUIRE(rl::equal_to_precision(pinv.g(), geometric(0, 10, Rational(-1))).equal);
    REQUIRE(rl::equal_to_precision(pinv.f(), geometric(1, 10, Rational(-1))).equal);
    const R left = rl::rmul(pinv, p);
    const R right = rl::rmul(p, pinv);
    for (const R* s : {&left, &right}) {
        REQUIRE(rl::equal_to_precision(s->g(), S::one()).equal);
        REQUIRE(rl::equal_to_precision(s->f(), S::identity()).equal);
    }

    // associativity on a mixed triple with a Laurent g
    const R a(poly(-2, {1, 3}), poly(1, {1, 1}));
    const R b(poly(0, {2, 0, 1}), poly(1, {1, 0, -1}));
    const R c(poly(1, {1, -1}), poly(1, {2, 1}));
    const R lhs = rl::rmul(rl::rmul(a, b, Prec(12)), c, Prec(12));
    const R rhs = rl::rmul(a, rl::rmul(b, c, Prec(12)), Prec(12));
    REQUIRE(rl::equal_to_precision(lhs.g(), rhs.g()).equal);
    REQUIRE(rl::equal_to_precision(lhs.f(), rhs.f()).equal);
}

TEST_CASE("integer powers match repeated products") {
    const R p = pascal();
    const R cube = rl::rpow(p, 3);
    const R cube_seq = rl::rmul(rl::rmul(p, p), p);
    REQUIRE(rl::equal_to_precision(cube.g(), cube_seq.g()).equal);
    REQUIRE(rl::equal_to_precision(cube.f(), cube_seq.f()).equal);
    // closed form of the cube: (1/(1-3z), z/(1-3z))
    REQUIRE(rl::equal_to_precision(cube.g(), geometric(0, 10, Rational(3))).equal);
    REQUIRE(rl::entry(cube, 3, 1) == Rational(27));

    REQUIRE(rl::rpow(p, 0) == R::identity());
    const R pm2 = rl::rpow(p, -2);
    const R pm2_seq = rl::rinverse(rl::rmul(p, p));
    REQUIRE(rl::equal_to_precision(pm2.g(), pm2_seq.g()).equal);
    REQUIRE(rl::equal_to_precision(pm2.f(), pm2_seq.f()).equal);

    // (g^m, f) = (g, z)^m (1, f) exactly for polynomial data
    const auto both = rl::decompose_power(poly(0, {1, 1}), poly(1, {1, 0, 2}), 3);
    REQUIRE(both.first == both.second);
}

TEST_CASE("roots in the order-zero tangent subgroup") {
    const R p = pascal(12);
    const R sq = rl::rmul(p, p);
    const R back = rl::rnth_root(sq, 2);
    REQUIRE(rl::equal_to_precision(back.g(), p.g()).equal);
    REQUIRE(rl::equal_to_precision(back.f(), p.f()).equal);
    for (long long n : {2LL, 3LL, 4LL}) {
        const R root = rl::rnth_root(p, n);
        const R redo = rl::rpow(root, n);
        REQUIRE(rl::equal_to_precision(redo.g(), p.g()).equal);
        REQUIRE(rl::equal_to_precision(redo.f(), p.f()).equal);
    }
    // g_0 != 1: the root's constant term is the field root, and the
    // degree-by-degree recursion must divide by n * root_0^(n-1), not by
    // anything built from g_0 itself
    const R scaled(ser(0, {4, 4, 1}, 3), poly(1, {1, 1}));
    const R half = rl::rnth_root(scaled, 2);
    REQUIRE(half.g().coeffs().front() == Rational(2));
    const R resq = rl::rpow(half, 2);
    REQUIRE(rl::equal_to_precision(resq.g(), scaled.g()).equal);
    REQUIRE(rl::equal_to_precision(resq.f(), scaled.f()).equal);
    REQUIRE(half.g().coeff_at(1).value() == Rational(1));  // 4 + 4z + ... = (2 + z + ...)^2

    REQUIRE_THROWS_AS(rl::rnth_root(R(poly(-1, {1}), poly(1, {1})), 2), rl::NotInSubgroup);
    REQUIRE_THROWS_AS(rl::rnth_root(R(poly(0, {1}), poly(1, {2})), 2), rl::NotInSubgroup);
    REQUIRE_THROWS_AS(rl::rnth_root(R(poly(0, {2}), poly(1, {1})), 2), rl::NoRootInField);
}

TEST_CASE("A- and Z-sequences of the binomial array") {
    const R p = pascal();
    REQUIRE(rl::equal_to_precision(rl::a_sequence(p), poly(0, {1, 1})).equal);
    REQUIRE(rl::equal_to_precision(rl::z_sequence(p), S::one()).equal);
    const auto az = rl::az_data(p);
    REQUIRE(az.anchor_col == 0);
    REQUIRE(az.diag_seed == Rational(1));
}

TEST_CASE("A- and Z-recurrences hold on a window") {
    const R r(poly(-2, {2, 1, -1}), poly(1, {1, 2, 1}));
    const Prec cap(14);
    const S a = rl::a_sequence(r, cap);
    const long long p = 1;  // anchor column
    const S z = rl::z_sequence(r, p, cap);
    // cols reach the diagonal of every summed row so each sum ends on a
    // structural zero inside the window
    const auto w = rl::window(r, -6, 4, -3, 6, cap);
    // d(m+1, j+1) = sum_i a_i d(m, j+i) wherever every referenced cell is known
    for (long long m = -6; m <= 3; ++m)
        for (long long j = -3; j <= 3; ++j) {
            if (!w.at(m + 1, j + 1).known) continue;
            Rational sum(0);
            bool ok = true;
            for (long long i = 0; j + i <= 6 && i < 12; ++i) {
                if (w.structural_zero(m, j + i)) break;  // rest of the row is zero
                if (!w.at(m, j + i).known || !a.known_at(i)) {
                    ok = false;
                    break;
                }
                sum = sum + a.at(i) * w.at(m, j + i).value;
            }
            if (!ok) continue;
            REQUIRE(w.at(m + 1, j + 1).value == sum);
        }
    // anchor column: d(qp+m+1, p) = sum_i z_i d(qp+m, p+i) for m != -1
    const long long qp = r.diag_offset() + p;  // diagonal row of the anchor column
    for (long long m = -4; m <= 2; ++m) {
        if (m == -1) continue;
        if (qp + m + 1 > 4 || qp + m < -6) continue;
        if (!w.at(qp + m + 1, p).known) continue;
        Rational sum(0);
        bool ok = true;
        for (long long i = 0; p + i <= 6 && i < 12; ++i) {
            if (w.structural_zero(qp + m, p + i)) break;
            if (!w.at(qp + m, p + i).known || !z.known_at(i)) {
                ok = false;
                break;
            }
            sum = sum + z.at(i) * w.at(qp + m, p + i).value;
        }
        if (!ok) continue;
        REQUIRE(w.at(qp + m + 1, p).value == sum);
    }
}

TEST_CASE("reconstruction from one column and the A-sequence") {
    // rightward-only: binomials from the all-ones column
    const std::vector<Rational> ones(7, Rational(1));
    const auto w = rl::reconstruct(poly(0, {1, 1}), ones, 0, 0, 0, 6);
    for (long long m = 0; m <= 6; ++m)
        for (long long n = 0; n <= 6; ++n) {
            REQUIRE(w.at(m, n).known);
            REQUIRE(w.at(m, n).value == binom(m, n));
        }

    // two-sided: the semi-Laurent golden array, seeded from column 0
    const R r(geometric(-3, 8), geometric(1, 8));
    std::vector<Rational> seed;
    for (long long m = -3; m <= 1; ++m) seed.push_back(*rl::entry(r, m, 0));
    const auto rec = rl::reconstruct(poly(0, {1, 1}), seed, -3, 0, -2, 3);
    long long known_cells = 0;
    for (long long m = rec.row_lo; m <= rec.row_hi; ++m)
        for (long long n = -2; n <= 3; ++n) {
            if (!rec.at(m, n).known) continue;
            ++known_cells;
            REQUIRE(rec.at(m, n).value == *rl::entry(r, m, n));
        }
    // every structural zero plus the full rightward triangle must be known
    REQUIRE(known_cells >= 25);
    // the leftward pass loses one bottom row per step but keeps the top rows
    REQUIRE(rec.at(-4, -1).known);
    REQUIRE(rec.at(-4, -1).value == Rational(1));

    REQUIRE_THROWS_AS(rl::reconstruct(poly(1, {1}), ones, 0, 0, 0, 3), rl::ZeroLeadingA);
    REQUIRE_THROWS_AS(rl::reconstruct(poly(0, {1, 1}), std::vector<Rational>{}, 0, 0, 0, 3),
                      rl::UsageError);
}

TEST_CASE("semidirect coordinates") {
    const R r(ser(-2, {3, 1, 4}, 1), poly(1, {1, 1}));
    const auto c = rl::chi_decompose(r);
    REQUIRE(c.shift == 2);
    REQUIRE(c.t_part.order() == 0);
    const R back = rl::chi_compose(c);
    REQUIRE(back.g() == r.g());
    REQUIRE(back.f() == r.f());

    // the transported product agrees with the direct one
    const R s(poly(-1, {2, 1}), poly(1, {1, 0, 1}));
    const Prec cap(10);
    const auto prod = rl::semidirect_mul(rl::chi_decompose(r), rl::chi_decompose(s), cap);
    const R direct = rl::rmul(r, s, cap);
    const R assembled = rl::chi_compose(prod);
    REQUIRE(rl::equal_to_precision(assembled.g(), direct.g()).equal);
    REQUIRE(rl::equal_to_precision(assembled.f(), direct.f()).equal);

    // psi is an action: psi(f2)(psi(f1)(t, n)) = psi(f1 o f2)(t, n)
    const S f1 = poly(1, {1, 2});
    const S f2 = poly(1, {1, 0, 1});
    const S t = poly(0, {1, 1, 1});
    const long long n = -2;
    const auto step = rl::psi_action(f1, t, n, cap);
    const auto lhs = rl::psi_action(f2, step.first, step.second, cap);
    const auto rhs = rl::psi_action(rl::compose(f1, f2, cap), t, n, cap);
    REQUIRE(lhs.second == rhs.second);
    REQUIRE(rl::equal_to_precision(lhs.first, rhs.first).equal);
}
