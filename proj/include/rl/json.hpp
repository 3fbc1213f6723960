#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "dual.hpp"
#include "lie.hpp"
#include "rational.hpp"
#include "riordan.hpp"
#include "series.hpp"

namespace rl {

using nlohmann::json;

// Per-field coefficient encoding. Rationals are canonical "p/q" (plain "p"
// when q = 1); dual numbers append "+r/sE" when the infinitesimal part is
// nonzero, e.g. "1/2+3/4E" or "2-1/3E".
template <class F>
struct FieldCodec;

template <>
struct FieldCodec<Rational> {
    static std::string to_string(const Rational& x) { return x.str(); }
    static Rational parse(std::string_view text) { return Rational::parse(text); }
};

template <CoefficientField F>
struct FieldCodec<Dual<F>> {
    static std::string to_string(const Dual<F>& x) {
        std::string s = FieldCodec<F>::to_string(x.real());
        if (!x.infinitesimal().is_zero()) {
            std::string e = FieldCodec<F>::to_string(x.infinitesimal());
            if (!e.empty() && e[0] == '-') {
                s += "-";
                e.erase(e.begin());
            } else {
                s += "+";
            }
            s += e + "E";
        }
        return s;
    }

    static Dual<F> parse(std::string_view text) {
        if (!text.empty() && text.back() == 'E') {
            std::string_view body = text.substr(0, text.size() - 1);
            // split at the last sign that is not a leading sign or part of "/"
            for (std::size_t i = body.size(); i-- > 1;) {
                if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/' &&
                    !(body[i - 1] == '+' || body[i - 1] == '-')) {
                    F real = FieldCodec<F>::parse(body.substr(0, i));
                    std::string eps(body.substr(i));
                    if (eps == "+" || eps == "-") eps += "1";
                    if (eps[0] == '+') eps.erase(eps.begin());
                    return Dual<F>(real, FieldCodec<F>::parse(eps));
                }
            }
            // bare "rE" form
            return Dual<F>(F(0), FieldCodec<F>::parse(body));
        }
        return Dual<F>(FieldCodec<F>::parse(text), F(0));
    }
};

// --- series ---------------------------------------------------------------------

template <CoefficientField F>
json series_to_json(const Series<F>& s) {
    json j;
    switch (s.kind()) {
        case Series<F>::Kind::exact_zero:
            j["kind"] = "exact_zero";
            break;
        case Series<F>::Kind::zero_to_prec:
            j["kind"] = "zero_to_prec";
            j["prec"] = s.prec().value();
            break;
        case Series<F>::Kind::known: {
            j["kind"] = "known";
            j["order"] = s.order();
            json coeffs = json::array();
            for (const F& c : s.coeffs()) coeffs.push_back(FieldCodec<F>::to_string(c));
            j["coeffs"] = std::move(coeffs);
            if (s.finite_support())
                j["finite_support"] = true;
            else
                j["prec"] = s.prec().value();
            break;
        }
    }
    return j;
}

// `default_prec`, when given, is the working precision for inputs that omit
// "prec": the window is padded with certified zeros up to it. A
// "finite_support" flag (or force_finite_support) marks the input as an exact
// Laurent polynomial instead.
template <CoefficientField F>
Series<F> series_from_json(const json& j, std::optional<long long> default_prec = std::nullopt,
                           bool force_finite_support = false) {
    if (!j.is_object()) throw ParseError("series must be a JSON object");
    std::string kind = j.value("kind", std::string());
    if (kind.empty()) kind = j.contains("coeffs") ? "known" : "";
    if (kind == "exact_zero") return Series<F>::exact_zero();
    if (kind == "zero_to_prec") {
        if (!j.contains("prec")) throw ParseError("zero_to_prec series needs a prec");
        return Series<F>::zero_to_prec(j.at("prec").get<long long>());
    }
    if (kind != "known") throw ParseError("series kind must be known, zero_to_prec or exact_zero");
    if (!j.contains("order") || !j.contains("coeffs"))
        throw ParseError("known series needs order and coeffs");
    const long long order = j.at("order").get<long long>();
    std::vector<F> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (!c.is_string()) throw ParseError("coefficients must be strings");
        coeffs.push_back(FieldCodec<F>::parse(c.get<std::string>()));
    }
    const bool fs = force_finite_support || j.value("finite_support", false);
    if (fs) return Series<F>::polynomial(order, std::move(coeffs));
    long long prec = order + static_cast<long long>(coeffs.size());
    if (j.contains("prec"))
        prec = j.at("prec").get<long long>();
    else if (default_prec)
        prec = std::max(prec, *default_prec);
    if (prec < order + static_cast<long long>(coeffs.size()))
        throw ParseError("prec smaller than the coefficient window");
    coeffs.resize(static_cast<std::size_t>(prec - order), F(0));
    return Series<F>::make(order, std::move(coeffs), prec);
}

// --- pairs and windows -------------------------------------------------------------

template <CoefficientField F>
json riordan_to_json(const RiordanArray<F>& r) {
    return json{{"g", series_to_json(r.g())}, {"f", series_to_json(r.f())}};
}

template <CoefficientField F>
RiordanArray<F> riordan_from_json(const json& j, std::optional<long long> default_prec = std::nullopt,
                                  bool force_finite_support = false) {
    if (!j.is_object() || !j.contains("g") || !j.contains("f"))
        throw ParseError("riordan pair needs g and f");
    return RiordanArray<F>(series_from_json<F>(j.at("g"), default_prec, force_finite_support),
                           series_from_json<F>(j.at("f"), default_prec, force_finite_support));
}

template <CoefficientField F>
json window_to_json(const MatrixWindow<F>& w) {
    json rows = json::array();
    for (long long m = w.row_lo; m <= w.row_hi; ++m) {
        json row = json::array();
        for (long long n = w.col_lo; n <= w.col_hi; ++n) {
            const auto& cell = w.at(m, n);
            if (cell.known)
                row.push_back(FieldCodec<F>::to_string(cell.value));
            else
                row.push_back(nullptr);
        }
        rows.push_back(std::move(row));
    }
    return json{{"row_lo", w.row_lo}, {"col_lo", w.col_lo}, {"rows", std::move(rows)}};
}

template <CoefficientField F>
json tangent_to_json(const TangentPair<F>& v) {
    return json{{"gamma", series_to_json(v.gamma)}, {"kappa", series_to_json(v.kappa)}};
}

template <CoefficientField F>
TangentPair<F> tangent_from_json(const json& j, std::optional<long long> default_prec = std::nullopt,
                                 bool force_finite_support = false) {
    if (!j.is_object() || !j.contains("gamma") || !j.contains("kappa"))
        throw ParseError("tangent pair needs gamma and kappa");
    return TangentPair<F>(series_from_json<F>(j.at("gamma"), default_prec, force_finite_support),
                          series_from_json<F>(j.at("kappa"), default_prec, force_finite_support));
}

template <CoefficientField F>
json operator_to_json(const ClassicalOperator<F>& op) {
    return json{{"chi", series_to_json(op.chi)}, {"alpha", series_to_json(op.alpha)}};
}

template <CoefficientField F>
ClassicalOperator<F> operator_from_json(const json& j,
                                        std::optional<long long> default_prec = std::nullopt,
                                        bool force_finite_support = false) {
    if (!j.is_object() || !j.contains("chi") || !j.contains("alpha"))
        throw ParseError("operator needs chi and alpha");
    return ClassicalOperator<F>(series_from_json<F>(j.at("chi"), default_prec, force_finite_support),
                                series_from_json<F>(j.at("alpha"), default_prec, force_finite_support));
}

template <CoefficientField F>
json semidirect_to_json(const SemidirectCoords<F>& c) {
    return json{{"t", series_to_json(c.t_part)}, {"shift", c.shift}, {"f", series_to_json(c.f_part)}};
}

} // namespace rl
