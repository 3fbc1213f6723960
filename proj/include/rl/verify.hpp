#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lie.hpp"
#include "rational.hpp"

namespace rl {

// Outcome of one randomized law suite: `passed` of `total` cases held; the
// first few failure descriptions are kept for diagnostics.
struct SuiteResult {
    std::string name;
    long long passed = 0;
    long long total = 0;
    std::vector<std::string> failures;

    bool ok() const { return total > 0 && passed == total; }

    void record(bool good, long long case_id, const std::string& what) {
        ++total;
        if (good) {
            ++passed;
        } else if (failures.size() < 5) {
            failures.push_back("case " + std::to_string(case_id) + ": " + what);
        }
    }
};

// Deterministic splitmix-style generator so seeded runs agree across
// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-enough integer in [lo, hi], inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(long long num, long long den) { return range(1, den) <= num; }

private:
    std::uint64_t state_;
};

namespace gen {

inline Rational coeff(Rng& rng) { return Rational(rng.range(-6, 6), rng.range(1, 3)); }

inline Rational nonzero(Rng& rng) {
    for (;;) {
        Rational c = coeff(rng);
        if (!c.is_zero()) return c;
    }
}

// Known series with a random order in [order_lo, order_hi] and `terms` known
// coefficients; occasionally an exact Laurent polynomial when allowed.
inline Series<Rational> laurent(Rng& rng, long long order_lo, long long order_hi, long long terms,
                                bool allow_exact = true) {
    const long long order = rng.range(order_lo, order_hi);
    // exact polynomials stay short: composing two of them is exact arithmetic
    // whose support multiplies, so long ones would dominate every suite
    if (allow_exact && rng.chance(1, 4)) {
        std::vector<Rational> cs{nonzero(rng)};
        for (long long i = 1; i < std::min<long long>(terms, 6); ++i) cs.push_back(coeff(rng));
        return Series<Rational>::polynomial(order, std::move(cs));
    }
    std::vector<Rational> cs{nonzero(rng)};
    for (long long i = 1; i < terms; ++i) cs.push_back(coeff(rng));
    return Series<Rational>::make(order, std::move(cs), order + terms);
}

// order-one multiplier; monic forces the linear coefficient to 1
inline Series<Rational> multiplier(Rng& rng, long long terms, bool monic,
                                   bool allow_exact = true) {
    std::vector<Rational> cs{monic ? Rational(1) : nonzero(rng)};
    if (allow_exact && rng.chance(1, 4)) {
        cs.resize(static_cast<std::size_t>(std::min<long long>(terms, 6)), Rational(0));
        for (std::size_t i = 1; i < cs.size(); ++i) cs[i] = coeff(rng);
        return Series<Rational>::polynomial(1, std::move(cs));
    }
    for (long long i = 1; i < terms; ++i) cs.push_back(coeff(rng));
    return Series<Rational>::make(1, std::move(cs), 1 + terms);
}

inline RiordanArray<Rational> array(Rng& rng, long long order_lo, long long order_hi,
                                    long long terms, bool monic = false,
                                    bool allow_exact = true) {
    return RiordanArray<Rational>(laurent(rng, order_lo, order_hi, terms, allow_exact),
                                  multiplier(rng, terms, monic, allow_exact));
}

inline TangentPair<Rational> tangent(Rng& rng, long long terms, long long kappa_min_order = 1,
                                     long long gamma_min_order = -3) {
    return TangentPair<Rational>(laurent(rng, gamma_min_order, 3, terms),
                                 laurent(rng, kappa_min_order, kappa_min_order + 2, terms));
}

// Reinterprets coefficients beyond prec: same known prefix, `extra` fresh
// random coefficients appended. Exact inputs have nothing beyond prec.
inline Series<Rational> extend(Rng& rng, const Series<Rational>& a, long long extra) {
    if (!a.is_known() || a.prec().is_infinite()) return a;
    std::vector<Rational> cs(a.coeffs().begin(), a.coeffs().end());
    for (long long i = 0; i < extra; ++i) cs.push_back(coeff(rng));
    return Series<Rational>::make(a.order(), std::move(cs), a.prec().value() + extra);
}

} // namespace gen

namespace detail {

inline bool eq(const Series<Rational>& a, const Series<Rational>& b) {
    return equal_to_precision(a, b).equal;
}

// True when everything `claimed` reports is also reported, unchanged, by
// `wider` (the same computation with better-known inputs).
inline bool consistent(const Series<Rational>& claimed, const Series<Rational>& wider) {
    switch (claimed.kind()) {
        case Series<Rational>::Kind::exact_zero:
            // "exactly zero" may not be contradicted by a certified nonzero
            return !wider.is_known();
        case Series<Rational>::Kind::zero_to_prec: {
            const long long p = claimed.prec().value();
            if (wider.is_exact_zero()) return true;
            if (wider.is_zero_to_prec()) return wider.prec().value() >= p;
            return wider.order() >= p;
        }
        default:
            break;
    }
    // every coefficient below claimed's order must still be (known) zero
    if (wider.min_order() < claimed.order()) {
        if (!wider.is_known()) return false;
        if (wider.order() < claimed.order()) return false;
    }
    const long long hi = claimed.prec().is_infinite()
                             ? claimed.order() + static_cast<long long>(claimed.coeffs().size())
                             : claimed.prec().value();
    for (long long e = claimed.order(); e < hi; ++e) {
        if (!wider.known_at(e)) return false;
        if (!(wider.at(e) == claimed.at(e))) return false;
    }
    if (claimed.prec().is_infinite()) {
        // an exact claim asserts zeros beyond its support; any certified
        // nonzero out there would contradict it
        if (wider.is_known() && wider.prec().is_infinite()) return wider == claimed;
        if (wider.is_known())
            for (long long e = hi; Prec(e) < wider.prec(); ++e)
                if (!wider.at(e).is_zero()) return false;
    }
    return true;
}

struct CaseOutcome {
    bool good = false;
    std::string what;
};

// Runs `cases` independent randomized checks, possibly across threads. Each
// case draws from its own generator seeded by (seed, index), so results are
// identical no matter how work is scheduled; outcomes are aggregated in index
// order. A case that throws fails with the exception text.
template <class Fn>
SuiteResult run_cases(const char* name, std::uint64_t seed, long long cases, Fn&& fn) {
    SuiteResult res{name, 0, 0, {}};
    if (cases <= 0) return res;
    std::vector<CaseOutcome> out(static_cast<std::size_t>(cases));
    std::atomic<long long> cursor{0};
    const auto body = [&] {
        for (;;) {
            const long long i = cursor.fetch_add(1);
            if (i >= cases) return;
            Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1));
            auto& slot = out[static_cast<std::size_t>(i)];
            try {
                slot = fn(rng);
            } catch (const std::exception& e) {
                slot = CaseOutcome{false, std::string("exception: ") + e.what()};
            }
        }
    };
    const unsigned hw = std::thread::hardware_concurrency();
    const long long workers = std::min<long long>(cases, hw ? hw : 1);
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (long long w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    for (long long i = 0; i < cases; ++i)
        res.record(out[static_cast<std::size_t>(i)].good, i, out[static_cast<std::size_t>(i)].what);
    return res;
}

} // namespace detail

// --- composition laws -----------------------------------------------------------

// Randomized checks of the basic substitution identities: power additivity,
// the standard-part split, right distributivity, compatibility with integer
// powers, and associativity of substitution.
inline SuiteResult verify_composition_laws(std::uint64_t seed, long long cases, long long prec) {
    using S = Series<Rational>;
    return detail::run_cases("composition-laws", seed, cases, [prec](Rng& rng) {
        const S f = gen::multiplier(rng, prec, false);
        const S k = gen::laurent(rng, 1, 3, prec);
        const S g = gen::laurent(rng, -4, 4, prec);
        const S h = gen::laurent(rng, -4, 4, prec);

        // f^m f^n = f^(m+n)
        const long long m = rng.range(-3, 3), n = rng.range(-3, 3);
        if (!detail::eq(mul(int_power(f, m), int_power(f, n)), int_power(f, m + n)))
            return detail::CaseOutcome{false, "power additivity"};
        // g o f = f^(ord g) * (t^g o f)
        if (!detail::eq(compose(g, f),
                        mul(int_power(f, g.order()), compose(standard_part(g), f))))
            return detail::CaseOutcome{false, "standard-part split"};
        // (g o f)(h o f) = (gh) o f
        if (!detail::eq(mul(compose(g, f), compose(h, f)), compose(mul(g, h), f)))
            return detail::CaseOutcome{false, "right distributivity"};
        // (g o f)^m = g^m o f
        if (!detail::eq(int_power(compose(g, f), m), compose(int_power(g, m), f)))
            return detail::CaseOutcome{false, "integer powers"};
        // (g o k) o f = g o (k o f)
        if (!detail::eq(compose(compose(g, k), f), compose(g, compose(k, f))))
            return detail::CaseOutcome{false, "associativity"};
        return detail::CaseOutcome{true, {}};
    });
}

// --- order laws -------------------------------------------------------------------

inline SuiteResult verify_order_laws(std::uint64_t seed, long long cases, long long prec) {
    using S = Series<Rational>;
    return detail::run_cases("order-laws", seed, cases, [prec](Rng& rng) {
        const S a = gen::laurent(rng, -4, 4, prec);
        const S b = gen::laurent(rng, -4, 4, prec);
        const S f = gen::multiplier(rng, prec, false);
        const S g = gen::laurent(rng, -4, 4, prec);

        if (mul(a, b).order() != a.order() + b.order())
            return detail::CaseOutcome{false, "product order"};
        const long long m = rng.range(1, 3);
        if (int_power(a, m).order() != m * a.order())
            return detail::CaseOutcome{false, "power order"};
        if (inverse_mul(a).order() != -a.order())
            return detail::CaseOutcome{false, "inverse order"};
        const S s = add(a, b);
        if (s.is_known() && s.order() < std::min(a.order(), b.order()))
            return detail::CaseOutcome{false, "sum order lower bound"};
        if (a.order() != b.order() && s.is_known() &&
            s.order() != std::min(a.order(), b.order()))
            return detail::CaseOutcome{false, "sum order equality for distinct orders"};
        // ord(g o f) = ord g * ord f for ord f >= 1
        const S fk = gen::laurent(rng, 1, 3, prec);
        if (compose(g, fk).order() != g.order() * fk.order())
            return detail::CaseOutcome{false, "composition order"};
        // order additivity of the g-part of the array product
        const RiordanArray<Rational> A(a, f);
        const RiordanArray<Rational> B(b, gen::multiplier(rng, prec, false));
        if (rmul(A, B).g().order() != a.order() + b.order())
            return detail::CaseOutcome{false, "array product order"};
        return detail::CaseOutcome{true, {}};
    });
}

// --- group axioms -----------------------------------------------------------------

inline SuiteResult verify_group_axioms(std::uint64_t seed, long long cases, long long prec) {
    using R = RiordanArray<Rational>;
    return detail::run_cases("group-axioms", seed, cases, [prec](Rng& rng) {
        const R id = R::identity();
        const R a = gen::array(rng, -4, 4, prec);
        const R b = gen::array(rng, -4, 4, prec);
        const R c = gen::array(rng, -4, 4, prec);

        const R lhs = rmul(rmul(a, b), c);
        const R rhs = rmul(a, rmul(b, c));
        if (!detail::eq(lhs.g(), rhs.g()) || !detail::eq(lhs.f(), rhs.f()))
            return detail::CaseOutcome{false, "associativity"};
        for (const R& side : {rmul(a, id), rmul(id, a)})
            if (!detail::eq(side.g(), a.g()) || !detail::eq(side.f(), a.f()))
                return detail::CaseOutcome{false, "identity law"};
        const R ainv = rinverse(a);
        for (const R& side : {rmul(a, ainv), rmul(ainv, a)})
            if (!detail::eq(side.g(), id.g()) || !detail::eq(side.f(), id.f()))
                return detail::CaseOutcome{false, "two-sided inverse"};
        if (ainv.g().order() != -a.g().order())
            return detail::CaseOutcome{false, "inverse order negation"};
        return detail::CaseOutcome{true, {}};
    });
}

// --- A/Z recurrences --------------------------------------------------------------

inline SuiteResult verify_az_recurrences(std::uint64_t seed, long long cases, long long prec) {
    return detail::run_cases("az-recurrences", seed, cases, [prec](Rng& rng) {
        const RiordanArray<Rational> r = gen::array(rng, -3, 3, prec);
        const long long q = r.diag_offset();
        const long long p = rng.range(-1, 1);  // anchor column
        const Series<Rational> a = a_sequence(r);
        const Series<Rational> z = z_sequence(r, p);
        const long long row_lo = q - 4, row_hi = q + 4;
        const long long col_lo = std::min(-3LL, p - 1), col_hi = row_hi - q;
        const auto w = window(r, row_lo, row_hi, col_lo, col_hi);
        long long checked = 0;

        // d(m+1, j+1) = sum_i a_i d(m, j+i)
        for (long long m = row_lo; m < row_hi; ++m)
            for (long long j = col_lo; j < col_hi; ++j) {
                if (!w.at(m + 1, j + 1).known) continue;
                Rational sum(0);
                bool all_known = true;
                for (long long e = j; e <= col_hi; ++e) {
                    if (w.structural_zero(m, e)) break;  // the row ends here
                    if (!w.at(m, e).known || !a.known_at(e - j)) {
                        all_known = false;
                        break;
                    }
                    sum = sum + a.at(e - j) * w.at(m, e).value;
                }
                if (!all_known) continue;
                ++checked;
                if (!(w.at(m + 1, j + 1).value == sum))
                    return detail::CaseOutcome{false, "A-recurrence"};
            }
        // anchor column: d(qp+m+1, p) = sum_i z_i d(qp+m, p+i), m != -1
        const long long qp = q + p;
        for (long long m = -4; m <= 3; ++m) {
            if (m == -1) continue;
            if (qp + m < row_lo || qp + m + 1 > row_hi) continue;
            if (!w.at(qp + m + 1, p).known) continue;
            Rational sum(0);
            bool all_known = true;
            for (long long e = p; e <= col_hi; ++e) {
                if (w.structural_zero(qp + m, e)) break;
                if (!w.at(qp + m, e).known || !z.known_at(e - p)) {
                    all_known = false;
                    break;
                }
                sum = sum + z.at(e - p) * w.at(qp + m, e).value;
            }
            if (!all_known) continue;
            ++checked;
            if (!(w.at(qp + m + 1, p).value == sum))
                return detail::CaseOutcome{false, "Z-recurrence"};
        }
        // rebuild a block from the anchor column and A alone
        std::vector<Rational> seedcol;
        for (long long i = 0; i < 5; ++i) {
            const auto e = entry(r, qp + i, p);
            if (!e) break;
            seedcol.push_back(*e);
        }
        if (seedcol.size() == 5) {
            const auto rec = reconstruct(a, seedcol, q, p, p - 1, p + 2);
            long long filled = 0;
            for (long long m = rec.row_lo; m <= rec.row_hi; ++m)
                for (long long n = rec.col_lo; n <= rec.col_hi; ++n) {
                    if (!rec.at(m, n).known) continue;
                    const auto truth = entry(r, m, n);
                    ++filled;
                    if (!truth || !(*truth == rec.at(m, n).value))
                        return detail::CaseOutcome{false, "reconstruction mismatch"};
                }
            if (filled < 10)
                return detail::CaseOutcome{false, "reconstruction left too much unknown"};
        }
        if (checked < 5)
            return detail::CaseOutcome{false, "window left the recurrences vacuous"};
        return detail::CaseOutcome{true, {}};
    });
}

// --- Lie bracket laws -------------------------------------------------------------

inline SuiteResult verify_jacobi(std::uint64_t seed, long long cases, long long prec) {
    using S = Series<Rational>;
    return detail::run_cases("jacobi", seed, cases, [prec](Rng& rng) {
        const TangentPair<Rational> v1 = gen::tangent(rng, prec);
        const TangentPair<Rational> v2 = gen::tangent(rng, prec);
        const TangentPair<Rational> v3 = gen::tangent(rng, prec);

        const auto b12 = bracket(v1, v2);
        const auto b21 = bracket(v2, v1);
        if (!detail::eq(b12.gamma, negate(b21.gamma)) || !detail::eq(b12.kappa, negate(b21.kappa)))
            return detail::CaseOutcome{false, "antisymmetry"};
        const auto j1 = bracket(bracket(v1, v2), v3);
        const auto j2 = bracket(bracket(v2, v3), v1);
        const auto j3 = bracket(bracket(v3, v1), v2);
        if (!detail::eq(add(add(j1.gamma, j2.gamma), j3.gamma), S::exact_zero()) ||
            !detail::eq(add(add(j1.kappa, j2.kappa), j3.kappa), S::exact_zero()))
            return detail::CaseOutcome{false, "Jacobi identity"};
        // the gamma part assembles from the substitution derivation
        if (!detail::eq(b12.gamma,
                        sub(psi_der(v1.kappa, v2.gamma), psi_der(v2.kappa, v1.gamma))))
            return detail::CaseOutcome{false, "derivation assembly"};
        if (!detail::eq(b12.kappa, bracket_x(v1.kappa, v2.kappa)))
            return detail::CaseOutcome{false, "substitution bracket"};
        // ord [kappa1, kappa2] >= max(ord kappa1, ord kappa2)
        if (b12.kappa.is_known() &&
            b12.kappa.order() < std::max(v1.kappa.order(), v2.kappa.order()))
            return detail::CaseOutcome{false, "kappa order growth"};
        // the order-zero subalgebra (gamma a fps, kappa of order >= 2) is closed
        const TangentPair<Rational> u1 = gen::tangent(rng, prec, 2, 0);
        const TangentPair<Rational> u2 = gen::tangent(rng, prec, 2, 0);
        const auto bu = bracket(u1, u2);
        if (!detail::certified_fps(bu.gamma) || (bu.kappa.is_known() && bu.kappa.order() < 2))
            return detail::CaseOutcome{false, "subalgebra closure"};
        return detail::CaseOutcome{true, {}};
    });
}

// --- dual-number consistency --------------------------------------------------------

inline SuiteResult verify_dual_consistency(std::uint64_t seed, long long cases, long long prec) {
    using S = Series<Rational>;
    using RD = RiordanArray<Dual<Rational>>;
    return detail::run_cases("dual-consistency", seed, cases, [prec](Rng& rng) {
        // derivative of substitution in the inner slot; the inner jet h + E*chi
        // must keep an invertible linear coefficient, so ord h = 1
        const S g = gen::laurent(rng, -3, 3, prec);
        const S h = gen::multiplier(rng, prec, false);
        const S chi = gen::laurent(rng, 1, 3, prec);
        const auto jet = compose(to_dual(g), dual_combine(h, chi));
        if (!detail::eq(real_part(jet), compose(g, h)) ||
            !detail::eq(infinitesimal_part(jet), dcompose(g, h, chi)))
            return detail::CaseOutcome{false, "composition derivative"};

        // product rule through both factors
        const RiordanArray<Rational> base1 = gen::array(rng, -3, 3, prec);
        const RiordanArray<Rational> base2 = gen::array(rng, -3, 3, prec);
        const TangentPair<Rational> v1 = gen::tangent(rng, prec);
        const TangentPair<Rational> v2 = gen::tangent(rng, prec);
        {
            const auto got = tangent_mul(base1, v1, base2, v2);
            const RD jet1(dual_combine(base1.g(), v1.gamma), dual_combine(base1.f(), v1.kappa));
            const RD jet2(dual_combine(base2.g(), v2.gamma), dual_combine(base2.f(), v2.kappa));
            const RD prod = rmul(jet1, jet2);
            if (!detail::eq(real_part(prod.g()), got.first.g()) ||
                !detail::eq(real_part(prod.f()), got.first.f()) ||
                !detail::eq(infinitesimal_part(prod.g()), got.second.gamma) ||
                !detail::eq(infinitesimal_part(prod.f()), got.second.kappa))
                return detail::CaseOutcome{false, "product rule"};
        }

        // left translation
        {
            const auto lt = left_translate(base1, v2);
            const RD jet1(to_dual(base1.g()), to_dual(base1.f()));
            const RD idv(dual_combine(S::one(), v2.gamma), dual_combine(S::identity(), v2.kappa));
            const RD prod = rmul(jet1, idv);
            if (!detail::eq(infinitesimal_part(prod.g()), lt.gamma) ||
                !detail::eq(infinitesimal_part(prod.f()), lt.kappa))
                return detail::CaseOutcome{false, "left translation"};
        }

        // operator commutator is extensional
        {
            const ClassicalOperator<Rational> l1(gen::laurent(rng, 0, 2, prec),
                                                 gen::laurent(rng, 1, 3, prec));
            const ClassicalOperator<Rational> l2(gen::laurent(rng, 0, 2, prec),
                                                 gen::laurent(rng, 1, 3, prec));
            const S hh = gen::laurent(rng, 0, 3, prec);
            const auto br = classical_bracket(l1, l2);
            const S lhs = sub(apply_operator(l1, apply_operator(l2, hh)),
                              apply_operator(l2, apply_operator(l1, hh)));
            if (!detail::eq(lhs, apply_operator(br, hh)))
                return detail::CaseOutcome{false, "operator commutator"};
        }
        return detail::CaseOutcome{true, {}};
    });
}

// --- precision soundness ------------------------------------------------------------

// For every operation: recomputing with inputs extended by random coefficients
// beyond their precision must reproduce everything the original run reported.
inline SuiteResult verify_precision_soundness(std::uint64_t seed, long long trials,
                                              long long prec) {
    using S = Series<Rational>;
    using R = RiordanArray<Rational>;
    return detail::run_cases("precision-soundness", seed, trials, [prec](Rng& rng) {
        const long long extra = 4;
        detail::CaseOutcome bad{false, {}};
        const auto check = [&bad](const char* what, const S& out, const S& wider) {
            if (!bad.what.empty()) return;
            if (!detail::consistent(out, wider)) bad.what = what;
        };

        const S a = gen::laurent(rng, -4, 4, prec, false);
        const S b = gen::laurent(rng, -4, 4, prec, false);
        const S ax = gen::extend(rng, a, extra);
        const S bx = gen::extend(rng, b, extra);
        check("add", add(a, b), add(ax, bx));
        check("mul", mul(a, b), mul(ax, bx));
        check("inverse_mul", inverse_mul(a), inverse_mul(ax));
        const long long m = rng.chance(1, 2) ? rng.range(1, 3) : rng.range(-3, -1);
        check("int_power", int_power(a, m), int_power(ax, m));
        check("derivative", derivative(a), derivative(ax));

        const S f = gen::multiplier(rng, prec, false, false);
        const S fx = gen::extend(rng, f, extra);
        check("compose", compose(a, f), compose(ax, fx));
        check("comp_inverse", comp_inverse(f), comp_inverse(fx));
        const long long it = rng.range(0, 3);
        check("iterate", iterate(f, it), iterate(fx, it));

        const S t = gen::multiplier(rng, prec, true, false);
        const S tx = gen::extend(rng, t, extra);
        check("iter_sqrt", iter_sqrt(t), iter_sqrt(tx));
        const long long nr = rng.range(2, 4);
        check("iter_root", iter_root(t, nr), iter_root(tx, nr));

        const S u = gen::laurent(rng, 0, 0, prec, false);
        const S sq = mul(u, u);
        const S sqx = gen::extend(rng, sq, extra);
        check("mult_root", mult_root(sq, 2), mult_root(sqx, 2));

        const R A(a, f);
        const R B(b, gen::multiplier(rng, prec, false, false));
        const R Ax(ax, fx);
        const R Bx(gen::extend(rng, B.g(), extra), gen::extend(rng, B.f(), extra));
        {
            const R out = rmul(A, B), wider = rmul(Ax, Bx);
            check("rmul g", out.g(), wider.g());
            check("rmul f", out.f(), wider.f());
            const R oi = rinverse(A), wi = rinverse(Ax);
            check("rinverse g", oi.g(), wi.g());
            check("rinverse f", oi.f(), wi.f());
            const long long pw = rng.range(-2, 3);
            const R op = rpow(A, pw), wp = rpow(Ax, pw);
            check("rpow g", op.g(), wp.g());
            check("rpow f", op.f(), wp.f());
            check("a_sequence", a_sequence(A), a_sequence(Ax));
            const long long anchor = rng.range(-1, 1);
            check("z_sequence", z_sequence(A, anchor), z_sequence(Ax, anchor));
        }
        {
            // an array in the root subgroup with a perfect-power constant term
            const Rational r0 = gen::nonzero(rng);
            const long long n = rng.range(2, 3);
            std::vector<Rational> gs{field_pow(r0, n)};
            for (long long j = 1; j < prec; ++j) gs.push_back(gen::coeff(rng));
            const S gr = S::make(0, std::move(gs), prec);
            const R C(gr, t);
            const R Cx(gen::extend(rng, gr, extra), tx);
            const R on = rnth_root(C, n), wn = rnth_root(Cx, n);
            check("rnth_root g", on.g(), wn.g());
            check("rnth_root f", on.f(), wn.f());
        }
        {
            const S unit = gen::laurent(rng, 0, 0, prec, false);
            const S unitx = gen::extend(rng, unit, extra);
            const long long sh = rng.range(-2, 2);
            check("psi_action", psi_action(f, unit, sh).first, psi_action(fx, unitx, sh).first);
        }
        {
            const S h = gen::multiplier(rng, prec, false, false);
            const S chi = gen::laurent(rng, 1, 3, prec, false);
            check("dcompose", dcompose(a, h, chi),
                  dcompose(ax, gen::extend(rng, h, extra), gen::extend(rng, chi, extra)));
            const TangentPair<Rational> v1(a, chi);
            const TangentPair<Rational> v1x(ax, gen::extend(rng, chi, extra));
            const S k2 = gen::laurent(rng, 1, 3, prec, false);
            const TangentPair<Rational> v2(b, k2);
            const TangentPair<Rational> v2x(bx, gen::extend(rng, k2, extra));
            const auto ob = bracket(v1, v2), wb = bracket(v1x, v2x);
            check("bracket gamma", ob.gamma, wb.gamma);
            check("bracket kappa", ob.kappa, wb.kappa);
        }
        if (!bad.what.empty()) return bad;
        return detail::CaseOutcome{true, {}};
    });
}

// Convenience: run one suite by its command-line name; unknown names return a
// result with total = 0.
inline SuiteResult run_suite(const std::string& name, std::uint64_t seed, long long cases,
                             long long prec) {
    if (name == "composition-laws") return verify_composition_laws(seed, cases, prec);
    if (name == "order-laws") return verify_order_laws(seed, cases, prec);
    if (name == "group-axioms") return verify_group_axioms(seed, cases, prec);
    if (name == "az-recurrences") return verify_az_recurrences(seed, cases, prec);
    if (name == "jacobi") return verify_jacobi(seed, cases, prec);
    if (name == "dual-consistency") return verify_dual_consistency(seed, cases, prec);
    if (name == "precision-soundness") return verify_precision_soundness(seed, cases, prec);
    return SuiteResult{name, 0, 0, {"unknown suite"}};
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "group-axioms",   "composition-laws", "order-laws",          "az-recurrences",
        "jacobi",         "dual-consistency", "precision-soundness",
    };
    return names;
}

} // namespace rl
