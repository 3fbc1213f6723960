#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "compose.hpp"
#include "series.hpp"

namespace rl {

// A generalized Riordan pair (g, f): column n of the associated bi-infinite
// lower-triangular-by-diagonals matrix is the coefficient sequence of g*f^n.
// g is any nonzero semi-Laurent series (its order shifts the diagonal), f is
// a formal power series of order exactly one.
template <CoefficientField F>
class RiordanArray {
public:
    RiordanArray(Series<F> g, Series<F> f) : g_(std::move(g)), f_(std::move(f)) {
        if (!g_.is_known())
            throw InvalidGeneratingSeries(g_.is_exact_zero()
                                              ? "generating series must be nonzero"
                                              : "generating series has undetermined order");
        if (!f_.is_known() || f_.order() != 1)
            throw InvalidF("multiplier series must have order exactly one");
        if (!f_.coeffs().front().is_invertible())
            throw InvalidF("linear coefficient of the multiplier must be invertible");
    }

    static RiordanArray identity() { return RiordanArray(Series<F>::one(), Series<F>::identity()); }

    const Series<F>& g() const { return g_; }
    const Series<F>& f() const { return f_; }

    // Row index of the first (nonzero) entry of column 0; column n starts on
    // row diag_offset() + n.
    long long diag_offset() const { return g_.order(); }

    bool order_zero() const { return g_.order() == 0; }        // the subgroup with ord g = 0
    bool tangent_multiplier() const {                          // f_1 = 1
        return f_.coeffs().front() == F(1);
    }

    friend bool operator==(const RiordanArray& a, const RiordanArray& b) {
        return a.g_ == b.g_ && a.f_ == b.f_;
    }

private:
    Series<F> g_, f_;
};

// --- matrix windows -----------------------------------------------------------

// A rectangular block of matrix entries with a per-cell determinacy flag.
// Entries strictly above the shifted diagonal (row - col < diag_offset) are
// structural zeros.
template <CoefficientField F>
struct MatrixWindow {
    long long row_lo = 0, row_hi = -1;  // inclusive
    long long col_lo = 0, col_hi = -1;  // inclusive
    long long diag_offset = 0;

    struct Cell {
        F value{0};
        bool known = false;
    };
    std::vector<Cell> cells;  // row-major

    long long rows() const { return row_hi - row_lo + 1; }
    long long cols() const { return col_hi - col_lo + 1; }

    Cell& at(long long m, long long n) {
        return cells[static_cast<std::size_t>((m - row_lo) * cols() + (n - col_lo))];
    }
    const Cell& at(long long m, long long n) const {
        return cells[static_cast<std::size_t>((m - row_lo) * cols() + (n - col_lo))];
    }

    bool structural_zero(long long m, long long n) const { return m - n < diag_offset; }
};

namespace detail {

// Precision horizon for building columns of (g, f) out to row `row_hi` when
// the inputs are exact and negative powers of f need a finite cutoff.
template <CoefficientField F>
Prec column_cap(const RiordanArray<F>& r, long long row_hi, long long col_lo, Prec cap) {
    if (cap.is_finite()) return cap;
    const long long depth = std::max(0LL, -col_lo);
    return Prec(row_hi + 1 - std::min(r.g().order(), 0LL) + depth + 4);
}

} // namespace detail

// Single matrix entry [z^m] g*f^n; nullopt when the inputs do not determine it.
template <CoefficientField F>
std::optional<F> entry(const RiordanArray<F>& r, long long m, long long n,
                       Prec cap = Prec::infinite()) {
    const Prec icap = detail::column_cap(r, m, n, cap);
    const Series<F> col = mul(r.g(), int_power(r.f(), n, icap));
    return col.coeff_at(m);
}

// Rectangular window of entries, columns built incrementally.
template <CoefficientField F>
MatrixWindow<F> window(const RiordanArray<F>& r, long long row_lo, long long row_hi,
                       long long col_lo, long long col_hi, Prec cap = Prec::infinite()) {
    if (row_lo > row_hi || col_lo > col_hi) throw UsageError("empty window");
    MatrixWindow<F> w;
    w.row_lo = row_lo;
    w.row_hi = row_hi;
    w.col_lo = col_lo;
    w.col_hi = col_hi;
    w.diag_offset = r.diag_offset();
    w.cells.resize(static_cast<std::size_t>(w.rows() * w.cols()));
    const Prec icap = detail::column_cap(r, row_hi, col_lo, cap);
    Series<F> pw = int_power(r.f(), col_lo, icap);
    for (long long n = col_lo; n <= col_hi; ++n) {
        const Series<F> col = mul(r.g(), pw);
        for (long long m = row_lo; m <= row_hi; ++m) {
            auto& cell = w.at(m, n);
            if (auto v = col.coeff_at(m)) {
                cell.value = *v;
                cell.known = true;
            }
        }
        if (n < col_hi) pw = mul(pw, r.f());
    }
    return w;
}

// --- group operations -----------------------------------------------------------

// (g1, f1) * (g2, f2) = (g1 * (g2 o f1), f2 o f1).
template <CoefficientField F>
RiordanArray<F> rmul(const RiordanArray<F>& a, const RiordanArray<F>& b,
                     Prec cap = Prec::infinite()) {
    return RiordanArray<F>(mul(a.g(), compose(b.g(), a.f(), cap)), compose(b.f(), a.f(), cap));
}

template <CoefficientField F>
RiordanArray<F> operator*(const RiordanArray<F>& a, const RiordanArray<F>& b) {
    return rmul(a, b);
}

// (g, f)^{-1} = (1/g o f^{<-1>}, f^{<-1>}).
template <CoefficientField F>
RiordanArray<F> rinverse(const RiordanArray<F>& a, Prec cap = Prec::infinite()) {
    const Series<F> fi = comp_inverse(a.f(), cap);
    return RiordanArray<F>(compose(inverse_mul(a.g(), cap), fi, cap), fi);
}

// Integer powers via the closed product form: the g-part of (g, f)^m is the
// product of g o f^{<i>} for i = 0..m-1 and the f-part is the m-fold iterate.
template <CoefficientField F>
RiordanArray<F> rpow(const RiordanArray<F>& a, long long m, Prec cap = Prec::infinite()) {
    if (m == 0) return RiordanArray<F>::identity();
    if (m < 0) return rpow(rinverse(a, cap), -m, cap);
    Series<F> prod = a.g();
    Series<F> fi = a.f();
    for (long long i = 1; i < m; ++i) {
        prod = mul(prod, compose(a.g(), fi, cap));
        fi = compose(a.f(), fi, cap);
    }
    return RiordanArray<F>(std::move(prod), std::move(fi));
}

// n-th root inside the subgroup with ord g = 0 and f_1 = 1. The f-part is the
// compositional root; the g-part is solved coefficient by coefficient against
// the product of G o F^{<i>}, whose degree-k coefficient moves linearly in
// G_k with slope n * G_0^{n-1}.
template <CoefficientField F>
RiordanArray<F> rnth_root(const RiordanArray<F>& a, long long n, Prec cap = Prec::infinite()) {
    if (n < 1) throw UsageError("root index must be positive");
    if (!a.order_zero() || !a.tangent_multiplier())
        throw NotInSubgroup("roots require ord g = 0 and linear coefficient one");
    const F g0 = a.g().coeffs().front();
    const auto root0 = nth_root(g0, static_cast<int>(n));
    if (!root0) throw NoRootInField("constant term has no n-th root in the coefficient field");
    if (n == 1) return a;
    const Series<F> froot = iter_root(a.f(), n, cap);
    Prec np = min(a.g().prec(), froot.prec());
    long long terms;
    if (np.is_infinite()) {
        terms = cap.is_finite() ? cap.value() : default_terms;
    } else {
        terms = np.value();
        if (cap.is_finite()) terms = std::min(terms, cap.value());
    }
    if (terms < 1) throw UsageError("precision cap leaves no determinable coefficients");
    const std::size_t nt = static_cast<std::size_t>(terms);
    // dense iterates F^{<i>}, i = 0..n-1
    std::vector<std::vector<F>> fit(static_cast<std::size_t>(n));
    fit[0].assign(nt, F(0));
    if (nt > 1) fit[0][1] = F(1);
    std::vector<F> fd(nt, F(0));
    for (long long e = 1; e < terms; ++e) fd[static_cast<std::size_t>(e)] = froot.known_at(e) ? froot.at(e) : F(0);
    for (std::size_t i = 1; i < fit.size(); ++i)
        fit[i] = detail::vec_compose_trunc(fd, fit[i - 1], nt);
    const F den = F(n) * field_pow(*root0, n - 1);
    // running composites C_i = G o F^{<i>} and power columns Q_i = (F^{<i>})^k
    std::vector<std::vector<F>> comp(static_cast<std::size_t>(n)), powk(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < comp.size(); ++i) {
        comp[i].assign(nt, F(0));
        comp[i][0] = *root0;
        powk[i] = fit[i];
    }
    std::vector<F> gout(nt, F(0));
    gout[0] = *root0;
    for (long long k = 1; k < terms; ++k) {
        std::vector<F> prod{F(1)};
        for (const auto& ci : comp) prod = detail::vec_mul_trunc(prod, ci, static_cast<std::size_t>(k) + 1);
        const F gk = a.g().known_at(k) ? a.g().at(k) : F(0);
        const F delta = (gk - detail::vec_at(prod, static_cast<std::size_t>(k))) / den;
        gout[static_cast<std::size_t>(k)] = delta;
        if (k + 1 < terms) {
            for (std::size_t i = 0; i < comp.size(); ++i) {
                for (std::size_t e = 0; e < nt; ++e)
                    comp[i][e] = comp[i][e] + delta * detail::vec_at(powk[i], e);
                powk[i] = detail::vec_mul_trunc(powk[i], fit[i], nt);
            }
        }
    }
    return RiordanArray<F>(Series<F>::from_window(0, std::move(gout), Prec(terms)), froot);
}

// (g^m, f) equals (g, z)^m * (1, f); returns both sides for cross-checking.
template <CoefficientField F>
std::pair<RiordanArray<F>, RiordanArray<F>> decompose_power(const Series<F>& g, const Series<F>& f,
                                                            long long m,
                                                            Prec cap = Prec::infinite()) {
    RiordanArray<F> direct(int_power(g, m, cap), f);
    RiordanArray<F> scale(g, Series<F>::identity());
    RiordanArray<F> shiftpart(Series<F>::one(), f);
    return {std::move(direct), rmul(rpow(scale, m, cap), shiftpart, cap)};
}

// --- A- and Z-sequences -----------------------------------------------------------

// The A-sequence (f/z) o f^{<-1>} drives every entry off the anchor column:
// d(m+1, j+1) = sum_i a_i d(m, j+i), for all integer m, j.
template <CoefficientField F>
Series<F> a_sequence(const RiordanArray<F>& r, Prec cap = Prec::infinite()) {
    return compose(shift(r.f(), -1), comp_inverse(r.f(), cap), cap);
}

// The Z-sequence of the column-p anchor: with gh the standard part of g*f^p
// and d its constant term, Z = ((1 - d/gh)/z) o f^{<-1>}; it reproduces the
// anchor column from its top entry downward.
template <CoefficientField F>
Series<F> z_sequence(const RiordanArray<F>& r, long long p = 0, Prec cap = Prec::infinite()) {
    const Series<F> gh = standard_part(mul(r.g(), int_power(r.f(), p, cap)));
    const F d = gh.coeffs().front();
    const Series<F> inner = sub(Series<F>::one(), scalar_mul(d, inverse_mul(gh, cap)));
    return compose(shift(inner, -1), comp_inverse(r.f(), cap), cap);
}

template <CoefficientField F>
struct AZData {
    Series<F> a;
    Series<F> z;
    long long anchor_col = 0;
    F diag_seed{0};  // the diagonal entry of the anchor column
};

template <CoefficientField F>
AZData<F> az_data(const RiordanArray<F>& r, long long p = 0, Prec cap = Prec::infinite()) {
    const Series<F> gh = standard_part(mul(r.g(), int_power(r.f(), p, cap)));
    return AZData<F>{a_sequence(r, cap), z_sequence(r, p, cap), p, gh.coeffs().front()};
}

// --- reconstruction from the A-sequence ---------------------------------------------

// Rebuilds a window of a matrix from one column and the A-sequence alone.
// seed[i] is the entry on row q+col+i of column `col` (starting on the
// diagonal). Columns to the right follow the A-recurrence directly; columns
// to the left invert it, losing one known row per step. Cells the data does
// not determine are left unknown.
template <CoefficientField F>
MatrixWindow<F> reconstruct(const Series<F>& a_seq, const std::vector<F>& seed, long long q,
                            long long col, long long col_lo, long long col_hi) {
    if (seed.empty()) throw UsageError("empty seed column");
    if (col_lo > col_hi) throw UsageError("empty column range");
    if (!a_seq.is_known() || a_seq.order() != 0 || !a_seq.coeffs().front().is_invertible())
        throw ZeroLeadingA("A-sequence needs an invertible constant term");
    const long long height = static_cast<long long>(seed.size());
    const long long row_lo = q + std::min(col, col_lo);
    const long long row_hi = q + col + height - 1;
    // internal grid is wider than the requested columns: the recurrence for a
    // row reaches every column up to the diagonal
    const long long icol_lo = std::min(col, col_lo);
    const long long icol_hi = std::max(col_hi, row_hi - q);
    MatrixWindow<F> grid;
    grid.row_lo = row_lo;
    grid.row_hi = row_hi;
    grid.col_lo = icol_lo;
    grid.col_hi = icol_hi;
    grid.diag_offset = q;
    grid.cells.resize(static_cast<std::size_t>(grid.rows() * grid.cols()));
    for (long long m = row_lo; m <= row_hi; ++m)
        for (long long c = icol_lo; c <= icol_hi; ++c)
            if (grid.structural_zero(m, c)) {
                grid.at(m, c).known = true;  // value already zero
            }
    for (long long i = 0; i < height; ++i) {
        auto& cell = grid.at(q + col + i, col);
        cell.value = seed[static_cast<std::size_t>(i)];
        cell.known = true;
    }
    const F a0 = a_seq.coeffs().front();
    // rightward, top row down: d(m, c) = sum_i a_i d(m-1, c-1+i)
    for (long long m = row_lo + 1; m <= row_hi; ++m) {
        for (long long c = col + 1; c <= std::min(icol_hi, m - q); ++c) {
            F v(0);
            bool known = true;
            for (long long i = 0; c - 1 + i <= (m - 1) - q; ++i) {
                const auto& d = grid.at(m - 1, c - 1 + i);
                if (d.known && d.value.is_zero()) continue;
                if (!d.known || !a_seq.known_at(i)) {
                    known = false;
                    break;
                }
                v = v + a_seq.at(i) * d.value;
            }
            auto& cell = grid.at(m, c);
            if (known && !cell.known) {
                cell.value = v;
                cell.known = true;
            }
        }
    }
    // leftward: d(m, c) = (d(m+1, c+1) - sum_{i>=1} a_i d(m, c+i)) / a_0
    for (long long c = col - 1; c >= col_lo; --c) {
        for (long long m = row_hi - 1; m >= row_lo; --m) {
            if (grid.structural_zero(m, c) || m + 1 > row_hi) continue;
            const auto& up = grid.at(m + 1, c + 1);
            F v(0);
            bool known = up.known;
            if (known) {
                v = up.value;
                for (long long i = 1; c + i <= m - q; ++i) {
                    const auto& d = grid.at(m, c + i);
                    if (d.known && d.value.is_zero()) continue;
                    if (!d.known || !a_seq.known_at(i)) {
                        known = false;
                        break;
                    }
                    v = v - a_seq.at(i) * d.value;
                }
            }
            auto& cell = grid.at(m, c);
            if (known && !cell.known) {
                cell.value = v / a0;
                cell.known = true;
            }
        }
    }
    // slice out the requested columns
    MatrixWindow<F> out;
    out.row_lo = row_lo;
    out.row_hi = row_hi;
    out.col_lo = col_lo;
    out.col_hi = col_hi;
    out.diag_offset = q;
    out.cells.resize(static_cast<std::size_t>(out.rows() * out.cols()));
    for (long long m = row_lo; m <= row_hi; ++m)
        for (long long c = col_lo; c <= col_hi; ++c) out.at(m, c) = grid.at(m, c);
    return out;
}

// --- semidirect coordinates ---------------------------------------------------------

// Splitting g = z^{-shift} * t, t a unit: the group is a semidirect product
// of pairs (unit, shift) by the substitution group.
template <CoefficientField F>
struct SemidirectCoords {
    Series<F> t_part;  // unit part of g
    long long shift = 0;
    Series<F> f_part;
};

template <CoefficientField F>
SemidirectCoords<F> chi_decompose(const RiordanArray<F>& r) {
    return SemidirectCoords<F>{standard_part(r.g()), -r.g().order(), r.f()};
}

template <CoefficientField F>
RiordanArray<F> chi_compose(const SemidirectCoords<F>& c) {
    return RiordanArray<F>(shift(c.t_part, -c.shift), c.f_part);
}

// The substitution action on coordinate pairs: f sends (g, n) to
// ((g o f) * (z/f)^n, n), with z/f the inverse of z^{-1} f.
template <CoefficientField F>
std::pair<Series<F>, long long> psi_action(const Series<F>& f, const Series<F>& g, long long n,
                                           Prec cap = Prec::infinite()) {
    if (!f.is_known() || f.order() != 1) throw OrderNotOne("action needs ord f = 1");
    if (!g.is_known() || g.order() != 0) throw OrderNotZero("action needs a unit series");
    const Series<F> z_over_f = inverse_mul(shift(f, -1), cap);
    return {mul(compose(g, f, cap), int_power(z_over_f, n, cap)), n};
}

// Group law transported to coordinates; the f-parts compose in the order
// (f1, f2) -> f2 o f1 so that coordinates multiply covariantly.
template <CoefficientField F>
SemidirectCoords<F> semidirect_mul(const SemidirectCoords<F>& x, const SemidirectCoords<F>& y,
                                   Prec cap = Prec::infinite()) {
    auto acted = psi_action(x.f_part, y.t_part, y.shift, cap);
    return SemidirectCoords<F>{mul(x.t_part, acted.first), x.shift + y.shift,
                               compose(y.f_part, x.f_part, cap)};
}

} // namespace rl
