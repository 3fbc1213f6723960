// Command-line front end: series and Riordan-array arithmetic, window
// rendering, tangent-level operations, and the randomized verification
// suites. Inputs are inline JSON or paths to JSON files; output is text by
// default, JSON with --json. Exit codes: 0 success, 1 domain error or failed
// verification, 2 usage/parse error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <rl/rl.hpp>

using rl::Prec;
using rl::Rational;
using rl::json;
using S = rl::Series<Rational>;
using R = rl::RiordanArray<Rational>;

namespace {

struct Ctx {
    std::optional<long long> prec;  // --prec / RIORDAN_DEFAULT_PREC
    bool as_json = false;
    bool finite_support = false;

    Prec cap() const { return prec ? Prec(*prec) : Prec::infinite(); }
};

json load_json(const std::string& arg) {
    const auto start = arg.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw rl::ParseError("empty input");
    std::string text;
    if (arg[start] == '{' || arg[start] == '[') {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw rl::ParseError("cannot open input file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw rl::ParseError(e.what());
    }
}

S series_arg(const Ctx& ctx, const std::string& arg) {
    return rl::series_from_json<Rational>(load_json(arg), ctx.prec, ctx.finite_support);
}

R array_arg(const Ctx& ctx, const std::string& g, const std::string& f) {
    return R(series_arg(ctx, g), series_arg(ctx, f));
}

rl::TangentPair<Rational> tangent_arg(const Ctx& ctx, const std::string& arg) {
    return rl::tangent_from_json<Rational>(load_json(arg), ctx.prec, ctx.finite_support);
}

rl::ClassicalOperator<Rational> operator_arg(const Ctx& ctx, const std::string& arg) {
    return rl::operator_from_json<Rational>(load_json(arg), ctx.prec, ctx.finite_support);
}

std::pair<long long, long long> range_arg(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw rl::UsageError("range must look like lo:hi");
    try {
        const long long lo = std::stoll(text.substr(0, colon));
        const long long hi = std::stoll(text.substr(colon + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw rl::UsageError("range bounds must be integers: " + text);
    }
}

void print(const Ctx& ctx, const json& j, const std::string& text) {
    if (ctx.as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

void emit_series(const Ctx& ctx, const S& s) {
    print(ctx, rl::series_to_json(s), rl::series_to_text(s) + "\n");
}

void emit_array(const Ctx& ctx, const R& r) {
    print(ctx, rl::riordan_to_json(r),
          "g: " + rl::series_to_text(r.g()) + "\nf: " + rl::series_to_text(r.f()) + "\n");
}

void emit_window(const Ctx& ctx, const rl::MatrixWindow<Rational>& w) {
    print(ctx, rl::window_to_json(w), rl::window_to_text(w));
}

void emit_tangent(const Ctx& ctx, const rl::TangentPair<Rational>& v) {
    print(ctx, rl::tangent_to_json(v),
          "gamma: " + rl::series_to_text(v.gamma) + "\nkappa: " + rl::series_to_text(v.kappa) +
              "\n");
}

// --- subcommand wiring ------------------------------------------------------------

struct SeriesFlags {
    std::string a, b, g, f;
    long long n = 0;
};

void add_series_commands(CLI::App& parent, Ctx& ctx) {
    auto* series = parent.add_subcommand("series", "arithmetic on truncated Laurent series");
    series->require_subcommand(1);
    auto flags = std::make_shared<SeriesFlags>();

    const auto two = [&](CLI::App* cmd) {
        cmd->add_option("--a", flags->a, "first series (JSON or file)")->required();
        cmd->add_option("--b", flags->b, "second series (JSON or file)")->required();
    };
    const auto one = [&](CLI::App* cmd, const char* name, std::string& slot) {
        cmd->add_option(name, slot, "series (JSON or file)")->required();
    };

    auto* add = series->add_subcommand("add", "a + b");
    two(add);
    add->callback(
        [&ctx, flags] { emit_series(ctx, rl::add(series_arg(ctx, flags->a), series_arg(ctx, flags->b))); });

    auto* mul = series->add_subcommand("mul", "a * b");
    two(mul);
    mul->callback(
        [&ctx, flags] { emit_series(ctx, rl::mul(series_arg(ctx, flags->a), series_arg(ctx, flags->b))); });

    auto* inv = series->add_subcommand("inv", "multiplicative inverse of a");
    one(inv, "--a", flags->a);
    inv->callback([&ctx, flags] { emit_series(ctx, rl::inverse_mul(series_arg(ctx, flags->a), ctx.cap())); });

    auto* pow = series->add_subcommand("pow", "integer power a^n");
    one(pow, "--a", flags->a);
    pow->add_option("--n", flags->n, "exponent (may be negative)")->required();
    pow->callback(
        [&ctx, flags] { emit_series(ctx, rl::int_power(series_arg(ctx, flags->a), flags->n, ctx.cap())); });

    auto* comp = series->add_subcommand("compose", "substitution g(f)");
    one(comp, "--g", flags->g);
    one(comp, "--f", flags->f);
    comp->callback([&ctx, flags] {
        emit_series(ctx, rl::compose(series_arg(ctx, flags->g), series_arg(ctx, flags->f), ctx.cap()));
    });

    auto* cinv = series->add_subcommand("comp-inverse", "compositional inverse of f");
    one(cinv, "--f", flags->f);
    cinv->callback([&ctx, flags] { emit_series(ctx, rl::comp_inverse(series_arg(ctx, flags->f), ctx.cap())); });

    auto* isqrt = series->add_subcommand("iter-sqrt", "iterative square root of f");
    one(isqrt, "--f", flags->f);
    isqrt->callback([&ctx, flags] { emit_series(ctx, rl::iter_sqrt(series_arg(ctx, flags->f), ctx.cap())); });

    auto* iroot = series->add_subcommand("iter-root", "iterative n-th root of f");
    one(iroot, "--f", flags->f);
    iroot->add_option("--n", flags->n, "root index")->required();
    iroot->callback(
        [&ctx, flags] { emit_series(ctx, rl::iter_root(series_arg(ctx, flags->f), flags->n, ctx.cap())); });

    auto* mroot = series->add_subcommand("mult-root", "multiplicative n-th root of a");
    one(mroot, "--a", flags->a);
    mroot->add_option("--n", flags->n, "root index")->required();
    mroot->callback([&ctx, flags] {
        emit_series(ctx, rl::mult_root(series_arg(ctx, flags->a), flags->n, std::nullopt, ctx.cap()));
    });

    auto* der = series->add_subcommand("derive", "formal derivative of a");
    one(der, "--a", flags->a);
    der->callback([&ctx, flags] { emit_series(ctx, rl::derivative(series_arg(ctx, flags->a))); });
}

struct RiordanFlags {
    std::string g, f, g2, f2, aseq, column;
    long long row = 0, col = 0, n = 0, q = 0, anchor = 0;
    std::string rows, cols;
};

void add_riordan_commands(CLI::App& parent, Ctx& ctx) {
    auto* riordan = parent.add_subcommand("riordan", "generalized Riordan arrays (g, f)");
    riordan->require_subcommand(1);
    auto flags = std::make_shared<RiordanFlags>();

    const auto pair = [&](CLI::App* cmd) {
        cmd->add_option("--g", flags->g, "generating series g (JSON or file)")->required();
        cmd->add_option("--f", flags->f, "multiplier series f (JSON or file)")->required();
    };

    auto* build = riordan->add_subcommand("build", "validate and echo the pair (g, f)");
    pair(build);
    build->callback([&ctx, flags] { emit_array(ctx, array_arg(ctx, flags->g, flags->f)); });

    auto* entry = riordan->add_subcommand("entry", "single matrix entry [z^row] g*f^col");
    pair(entry);
    entry->add_option("--row", flags->row, "row index")->required();
    entry->add_option("--col", flags->col, "column index")->required();
    entry->callback([&ctx, flags] {
        const auto v = rl::entry(array_arg(ctx, flags->g, flags->f), flags->row, flags->col, ctx.cap());
        json j{{"row", flags->row}, {"col", flags->col}, {"value", nullptr}};
        std::string text = "?";
        if (v) {
            j["value"] = rl::FieldCodec<Rational>::to_string(*v);
            text = rl::FieldCodec<Rational>::to_string(*v);
        }
        print(ctx, j, text + "\n");
    });

    auto* win = riordan->add_subcommand("window", "rectangular block of entries");
    pair(win);
    win->add_option("--rows", flags->rows, "row range lo:hi")->required();
    win->add_option("--cols", flags->cols, "column range lo:hi")->required();
    win->callback([&ctx, flags] {
        const auto rr = range_arg(flags->rows);
        const auto cc = range_arg(flags->cols);
        emit_window(ctx, rl::window(array_arg(ctx, flags->g, flags->f), rr.first, rr.second,
                                    cc.first, cc.second, ctx.cap()));
    });

    auto* mul = riordan->add_subcommand("mul", "group product (g, f) * (g2, f2)");
    pair(mul);
    mul->add_option("--g2", flags->g2, "second generating series")->required();
    mul->add_option("--f2", flags->f2, "second multiplier series")->required();
    mul->callback([&ctx, flags] {
        emit_array(ctx, rl::rmul(array_arg(ctx, flags->g, flags->f),
                                 array_arg(ctx, flags->g2, flags->f2), ctx.cap()));
    });

    auto* inv = riordan->add_subcommand("inv", "group inverse");
    pair(inv);
    inv->callback([&ctx, flags] { emit_array(ctx, rl::rinverse(array_arg(ctx, flags->g, flags->f), ctx.cap())); });

    auto* pow = riordan->add_subcommand("pow", "integer group power");
    pair(pow);
    pow->add_option("--n", flags->n, "exponent (may be negative)")->required();
    pow->callback(
        [&ctx, flags] { emit_array(ctx, rl::rpow(array_arg(ctx, flags->g, flags->f), flags->n, ctx.cap())); });

    auto* root = riordan->add_subcommand("root", "n-th group root (needs ord g = 0, f_1 = 1)");
    pair(root);
    root->add_option("--n", flags->n, "root index")->required();
    root->callback([&ctx, flags] {
        emit_array(ctx, rl::rnth_root(array_arg(ctx, flags->g, flags->f), flags->n, ctx.cap()));
    });

    auto* aseq = riordan->add_subcommand("aseq", "A-sequence of the array");
    pair(aseq);
    aseq->callback([&ctx, flags] { emit_series(ctx, rl::a_sequence(array_arg(ctx, flags->g, flags->f), ctx.cap())); });

    auto* zseq = riordan->add_subcommand("zseq", "Z-sequence of an anchor column");
    pair(zseq);
    zseq->add_option("--anchor", flags->anchor, "anchor column (default 0)");
    zseq->callback([&ctx, flags] {
        emit_series(ctx, rl::z_sequence(array_arg(ctx, flags->g, flags->f), flags->anchor, ctx.cap()));
    });

    auto* rec = riordan->add_subcommand(
        "reconstruct", "rebuild a window from one column and the A-sequence");
    rec->add_option("--aseq", flags->aseq, "A-sequence (series JSON or file)")->required();
    rec->add_option("--column", flags->column,
                    "seed column values from the diagonal down (JSON array of strings)")
        ->required();
    rec->add_option("--q", flags->q, "diagonal offset of the array")->required();
    rec->add_option("--col", flags->col, "index of the seed column")->required();
    rec->add_option("--cols", flags->cols, "column range lo:hi to rebuild")->required();
    rec->callback([&ctx, flags] {
        const json col_json = load_json(flags->column);
        if (!col_json.is_array()) throw rl::ParseError("seed column must be a JSON array");
        std::vector<Rational> seed;
        for (const auto& c : col_json) {
            if (!c.is_string()) throw rl::ParseError("seed values must be strings");
            seed.push_back(rl::FieldCodec<Rational>::parse(c.get<std::string>()));
        }
        const auto cc = range_arg(flags->cols);
        emit_window(ctx, rl::reconstruct(series_arg(ctx, flags->aseq), seed, flags->q, flags->col,
                                         cc.first, cc.second));
    });

    auto* chi = riordan->add_subcommand("chi", "semidirect coordinates of the array");
    pair(chi);
    chi->callback([&ctx, flags] {
        const auto c = rl::chi_decompose(array_arg(ctx, flags->g, flags->f));
        print(ctx, rl::semidirect_to_json(c),
              "t: " + rl::series_to_text(c.t_part) + "\nshift: " + std::to_string(c.shift) +
                  "\nf: " + rl::series_to_text(c.f_part) + "\n");
    });

    auto* psi = riordan->add_subcommand("psi", "substitution action of f on a pair (g, n)");
    psi->add_option("--f", flags->f, "acting multiplier (ord f = 1)")->required();
    psi->add_option("--g", flags->g, "unit series being acted on")->required();
    psi->add_option("--n", flags->n, "integer coordinate")->required();
    psi->callback([&ctx, flags] {
        const auto out =
            rl::psi_action(series_arg(ctx, flags->f), series_arg(ctx, flags->g), flags->n, ctx.cap());
        print(ctx, json{{"g", rl::series_to_json(out.first)}, {"n", out.second}},
              "g: " + rl::series_to_text(out.first) + "\nn: " + std::to_string(out.second) + "\n");
    });
}

struct LieFlags {
    std::string v1, v2, g, h, chi, base, base1, base2, op1, op2;
};

void add_lie_commands(CLI::App& parent, Ctx& ctx) {
    auto* lie = parent.add_subcommand("lie", "tangent-level operations");
    lie->require_subcommand(1);
    auto flags = std::make_shared<LieFlags>();

    auto* br = lie->add_subcommand("bracket", "Lie bracket of two tangent pairs");
    br->add_option("--v1", flags->v1, "first tangent pair (JSON or file)")->required();
    br->add_option("--v2", flags->v2, "second tangent pair (JSON or file)")->required();
    br->callback(
        [&ctx, flags] { emit_tangent(ctx, rl::bracket(tangent_arg(ctx, flags->v1), tangent_arg(ctx, flags->v2))); });

    auto* dc = lie->add_subcommand("dcompose", "directional derivative (g' o h) * chi");
    dc->add_option("--g", flags->g, "outer series")->required();
    dc->add_option("--inner", flags->h, "inner nonunit series h")->required();
    dc->add_option("--chi", flags->chi, "direction series")->required();
    dc->callback([&ctx, flags] {
        emit_series(ctx, rl::dcompose(series_arg(ctx, flags->g), series_arg(ctx, flags->h),
                                      series_arg(ctx, flags->chi), ctx.cap()));
    });

    auto* tm = lie->add_subcommand("tangent-mul", "derivative of the group product");
    tm->add_option("--base1", flags->base1, "first base array {\"g\":...,\"f\":...}")->required();
    tm->add_option("--v1", flags->v1, "tangent pair at base1")->required();
    tm->add_option("--base2", flags->base2, "second base array")->required();
    tm->add_option("--v2", flags->v2, "tangent pair at base2")->required();
    tm->callback([&ctx, flags] {
        const json b1 = load_json(flags->base1);
        const json b2 = load_json(flags->base2);
        const auto out = rl::tangent_mul(
            rl::riordan_from_json<Rational>(b1, ctx.prec, ctx.finite_support),
            tangent_arg(ctx, flags->v1),
            rl::riordan_from_json<Rational>(b2, ctx.prec, ctx.finite_support),
            tangent_arg(ctx, flags->v2), ctx.cap());
        print(ctx,
              json{{"base", rl::riordan_to_json(out.first)}, {"tangent", rl::tangent_to_json(out.second)}},
              "base g: " + rl::series_to_text(out.first.g()) + "\nbase f: " +
                  rl::series_to_text(out.first.f()) + "\ngamma: " +
                  rl::series_to_text(out.second.gamma) + "\nkappa: " +
                  rl::series_to_text(out.second.kappa) + "\n");
    });

    auto* lt = lie->add_subcommand("left-translate", "push a tangent pair along a base array");
    lt->add_option("--base", flags->base, "base array {\"g\":...,\"f\":...}")->required();
    lt->add_option("--v", flags->v1, "tangent pair at the identity")->required();
    lt->callback([&ctx, flags] {
        emit_tangent(ctx, rl::left_translate(
                              rl::riordan_from_json<Rational>(load_json(flags->base), ctx.prec,
                                                              ctx.finite_support),
                              tangent_arg(ctx, flags->v1), ctx.cap()));
    });

    auto* cb = lie->add_subcommand("classical-bracket", "commutator of L_{chi,alpha} operators");
    cb->add_option("--op1", flags->op1, "first operator {\"chi\":...,\"alpha\":...}")->required();
    cb->add_option("--op2", flags->op2, "second operator")->required();
    cb->callback([&ctx, flags] {
        const auto out =
            rl::classical_bracket(operator_arg(ctx, flags->op1), operator_arg(ctx, flags->op2));
        print(ctx, rl::operator_to_json(out),
              "chi: " + rl::series_to_text(out.chi) + "\nalpha: " + rl::series_to_text(out.alpha) +
                  "\n");
    });
}

struct VerifyFlags {
    std::uint64_t seed = 42;
    long long cases = 50;
};

void add_verify_commands(CLI::App& parent, Ctx& ctx, int& exit_code) {
    auto* verify = parent.add_subcommand("verify", "randomized law suites");
    verify->require_subcommand(1);
    auto flags = std::make_shared<VerifyFlags>();

    for (const std::string& name : rl::suite_names()) {
        auto* cmd = verify->add_subcommand(name, "run the " + name + " suite");
        cmd->add_option("--seed", flags->seed, "random seed (default 42)");
        cmd->add_option("--cases", flags->cases, "number of cases (default 50)");
        cmd->callback([&ctx, &exit_code, flags, name] {
            const long long prec = ctx.prec.value_or(16);
            const auto r = rl::run_suite(name, flags->seed, flags->cases, prec);
            if (r.ok()) {
                std::cout << "PASS " << r.passed << "/" << r.total << "\n";
            } else {
                std::cout << "FAIL " << r.passed << "/" << r.total << "\n";
                for (const auto& what : r.failures) std::cerr << "  " << what << "\n";
                exit_code = 1;
            }
        });
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact truncated semi-Laurent series and generalized Riordan arrays"};
    app.require_subcommand(1);
    app.fallthrough();

    Ctx ctx;
    int exit_code = 0;
    app.add_option("--prec", ctx.prec,
                   "default working precision for inputs that omit one; a per-series "
                   "\"prec\" always wins")
        ->envname("RIORDAN_DEFAULT_PREC")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", ctx.as_json, "emit JSON instead of text");
    app.add_flag("--finite-support", ctx.finite_support,
                 "treat inputs as exact Laurent polynomials");

    add_series_commands(app, ctx);
    add_riordan_commands(app, ctx);
    add_lie_commands(app, ctx);
    add_verify_commands(app, ctx, exit_code);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const rl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rl::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
