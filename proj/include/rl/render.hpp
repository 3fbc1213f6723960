#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "riordan.hpp"

namespace rl {

// Human-readable one-line series form, e.g. "z^-1 - 2 + z + O(z^5)".
template <CoefficientField F>
std::string series_to_text(const Series<F>& s) {
    if (s.is_exact_zero()) return "0";
    std::ostringstream os;
    if (s.is_zero_to_prec()) {
        os << "O(z^" << s.prec().value() << ")";
        return os.str();
    }
    bool first = true;
    for (std::size_t j = 0; j < s.coeffs().size(); ++j) {
        const F& c = s.coeffs()[j];
        if (c.is_zero()) continue;
        const long long e = s.order() + static_cast<long long>(j);
        std::string cs = FieldCodec<F>::to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(cs.begin());
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool unit_coeff = (cs == "1");
        if (e == 0) {
            os << cs;
        } else {
            if (!unit_coeff) os << cs << "*";
            os << "z";
            if (e != 1) os << "^" << e;
        }
    }
    if (s.prec().is_finite()) {
        if (!first) os << " + ";
        os << "O(z^" << s.prec().value() << ")";
    }
    return os.str();
}

// Fixed-width text grid: "·" above the shifted diagonal (structural zeros),
// "?" where the inputs do not determine an entry.
template <CoefficientField F>
std::string window_to_text(const MatrixWindow<F>& w) {
    const long long rows = w.rows(), cols = w.cols();
    std::vector<std::string> body(static_cast<std::size_t>(rows * cols));
    std::vector<std::size_t> width(static_cast<std::size_t>(cols), 1);
    for (long long m = w.row_lo; m <= w.row_hi; ++m) {
        for (long long n = w.col_lo; n <= w.col_hi; ++n) {
            const auto& cell = w.at(m, n);
            std::string t;
            if (w.structural_zero(m, n))
                t = "·";
            else if (!cell.known)
                t = "?";
            else
                t = FieldCodec<F>::to_string(cell.value);
            const std::size_t idx =
                static_cast<std::size_t>((m - w.row_lo) * cols + (n - w.col_lo));
            // the dot is three bytes of UTF-8 but one column wide
            const std::size_t visual = (t == "·") ? 1 : t.size();
            width[static_cast<std::size_t>(n - w.col_lo)] =
                std::max(width[static_cast<std::size_t>(n - w.col_lo)], visual);
            body[idx] = std::move(t);
        }
    }
    std::ostringstream os;
    for (long long i = 0; i < rows; ++i) {
        for (long long j = 0; j < cols; ++j) {
            const std::string& t = body[static_cast<std::size_t>(i * cols + j)];
            const std::size_t visual = (t == "·") ? 1 : t.size();
            if (j > 0) os << "  ";
            for (std::size_t pad = visual; pad < width[static_cast<std::size_t>(j)]; ++pad)
                os << ' ';
            os << t;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace rl
