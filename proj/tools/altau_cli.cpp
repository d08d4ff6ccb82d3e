// altau command-line front end; everything goes through the C interface.
#include <cstdio>
#include <functional>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include <altau/altau.h>

namespace
{

constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct ContextDeleter {
    void operator()(altau_context *c) const { altau_context_free(c); }
};
struct PolyDeleter {
    void operator()(altau_poly *p) const { altau_poly_free(p); }
};
using ContextPtr = std::unique_ptr<altau_context, ContextDeleter>;
using PolyPtr = std::unique_ptr<altau_poly, PolyDeleter>;

int exit_code(altau_status s)
{
    switch (s) {
    case ALTAU_OK:
        return 0;
    case ALTAU_CHECK_FAILED:
        return 1;
    case ALTAU_INVALID_ARGUMENT:
        return exit_usage;
    default:
        return exit_internal;
    }
}

// Prints the text (also for failed checks) or the error, and maps the status.
int finish(altau_status s, altau_text *text)
{
    if (text != nullptr) {
        std::fputs(altau_text_data(text), stdout);
        altau_text_free(text);
    }
    if (s != ALTAU_OK && s != ALTAU_CHECK_FAILED) {
        std::fprintf(stderr, "error: %s\n", altau_last_error());
    }
    return exit_code(s);
}

ContextPtr make_context()
{
    altau_context *ctx = nullptr;
    if (altau_context_create(&ctx) != ALTAU_OK) {
        std::fprintf(stderr, "error: %s\n", altau_last_error());
        return nullptr;
    }
    return ContextPtr(ctx);
}

char single_char(const std::string &s) { return s.size() == 1 ? s[0] : '\0'; }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact matrix resolvents, tau-structures and CUE correlators for the Ablowitz-Ladik hierarchy"};
    app.require_subcommand(1);
    // Lets --format follow any subcommand.
    app.fallthrough();
    app.set_version_flag("--version", std::string(altau_version()));

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::function<int(altau_format)> action;

    std::string sign = "-";
    int order = 1;
    auto *resolvent = app.add_subcommand("resolvent", "Coefficients a, b, c of a basic matrix resolvent");
    resolvent->add_option("--sign", sign, "+ or -")->check(CLI::IsMember({"+", "-"}))->capture_default_str();
    resolvent->add_option("--order", order, "Truncation order")->check(CLI::NonNegativeNumber)->capture_default_str();
    resolvent->callback([&] {
        action = [&](altau_format f) {
            auto ctx = make_context();
            if (!ctx) {
                return exit_internal;
            }
            altau_text *out = nullptr;
            const altau_status s = altau_resolvent(ctx.get(), single_char(sign), order, f, &out);
            return finish(s, out);
        };
    });

    std::string alpha = "+";
    int p = 1;
    std::string target = "r";
    auto *flow = app.add_subcommand("flow", "Image of q[n] or r[n] under D_{alpha,p}");
    flow->add_option("--alpha", alpha, "+ or -")->check(CLI::IsMember({"+", "-"}))->capture_default_str();
    flow->add_option("--p", p, "Flow index")->check(CLI::NonNegativeNumber)->capture_default_str();
    flow->add_option("--target", target, "q or r")->check(CLI::IsMember({"q", "r"}))->capture_default_str();
    flow->callback([&] {
        action = [&](altau_format f) {
            auto ctx = make_context();
            if (!ctx) {
                return exit_internal;
            }
            altau_text *out = nullptr;
            const altau_status s = altau_flow(ctx.get(), single_char(alpha), p, single_char(target), f, &out);
            return finish(s, out);
        };
    });

    std::string expr;
    bool t_flow = false;
    auto *apply = app.add_subcommand("apply", "Apply D_{alpha,p} (or d/dt) to a polynomial such as \"q[n]*r[n-1]\"");
    apply->add_option("--alpha", alpha, "+ or -")->check(CLI::IsMember({"+", "-"}))->capture_default_str();
    apply->add_option("--p", p, "Flow index")->check(CLI::NonNegativeNumber)->capture_default_str();
    apply->add_flag("--t", t_flow, "Use the combined flow d/dt instead");
    apply->add_option("--expr", expr, "Polynomial in q[n+i], r[n+i]")->required();
    apply->callback([&] {
        action = [&](altau_format f) {
            auto ctx = make_context();
            if (!ctx) {
                return exit_internal;
            }
            altau_poly *in = nullptr;
            altau_status s = altau_poly_parse(expr.c_str(), &in);
            if (s != ALTAU_OK) {
                return finish(s, nullptr);
            }
            PolyPtr input(in);
            altau_poly *res = nullptr;
            s = t_flow ? altau_t_flow(ctx.get(), input.get(), &res)
                       : altau_apply_derivation(ctx.get(), single_char(alpha), p, input.get(), &res);
            if (s != ALTAU_OK) {
                return finish(s, nullptr);
            }
            PolyPtr result(res);
            altau_text *out = nullptr;
            s = f == ALTAU_FORMAT_JSON ? altau_poly_to_json(result.get(), &out) : altau_poly_to_string(result.get(), &out);
            const int code = finish(s, out);
            if (code == 0) {
                std::fputs("\n", stdout);
            }
            return code;
        };
    });

    std::string pattern = "+-";
    int max = 2;
    auto *omega = app.add_subcommand("omega", "Table of multi-point Omega from the closed formula");
    omega->add_option("--pattern", pattern, "Sign pattern, e.g. ++-")->capture_default_str();
    omega->add_option("--max", max, "Largest index in every slot")->check(CLI::NonNegativeNumber)->capture_default_str();
    omega->callback([&] {
        action = [&](altau_format f) {
            auto ctx = make_context();
            if (!ctx) {
                return exit_internal;
            }
            altau_text *out = nullptr;
            const altau_status s = altau_omega(ctx.get(), pattern.c_str(), max, f, &out);
            return finish(s, out);
        };
    });

    int pmax = 2;
    int qmax = -1;
    int rmax = 2;
    auto *verify_tau = app.add_subcommand("verify-tau", "Symmetry, compatibility and (Lambda-1) Omega identities");
    verify_tau->add_option("--pmax", pmax, "Largest p")->check(CLI::NonNegativeNumber)->capture_default_str();
    verify_tau->add_option("--qmax", qmax, "Largest q (default: pmax)");
    verify_tau->add_option("--rmax", rmax, "Largest r")->check(CLI::NonNegativeNumber)->capture_default_str();
    verify_tau->callback([&] {
        action = [&](altau_format f) {
            auto ctx = make_context();
            if (!ctx) {
                return exit_internal;
            }
            altau_text *out = nullptr;
            const altau_status s = altau_verify_tau(ctx.get(), pmax, qmax < 0 ? pmax : qmax, rmax, f, &out);
            return finish(s, out);
        };
    });

    int k = 3;
    std::string theorem_pattern;
    int theorem_max = 2;
    auto *theorem = app.add_subcommand("theorem1", "Closed cyclic-sum formula against nested derivation");
    theorem->add_option("--k", k, "Number of points (all 2^k patterns)")->check(CLI::Range(2, 6))->capture_default_str();
    theorem->add_option("--pattern", theorem_pattern, "Single sign pattern instead of all");
    theorem->add_option("--max", theorem_max, "Largest index")->check(CLI::PositiveNumber)->capture_default_str();
    theorem->callback([&] {
        action = [&](altau_format f) {
            auto ctx = make_context();
            if (!ctx) {
                return exit_internal;
            }
            altau_text *out = nullptr;
            const int kk = theorem_pattern.empty() ? k : 0;
            const altau_status s = altau_theorem_check(ctx.get(), kk, theorem_pattern.c_str(), theorem_max, f, &out);
            return finish(s, out);
        };
    });

    bool quick = false;
    auto *verify = app.add_subcommand("verify", "Run every identity suite");
    verify->add_flag("--quick", quick, "Smaller truncations");
    verify->callback([&] {
        action = [&](altau_format f) {
            auto ctx = make_context();
            if (!ctx) {
                return exit_internal;
            }
            altau_text *out = nullptr;
            const altau_status s = altau_verify_all(ctx.get(), quick ? 1 : 0, f, &out);
            return finish(s, out);
        };
    });

    auto *cue = app.add_subcommand("cue", "The solution from the symbol (1 + Q zeta)(1 + Q / zeta)");
    cue->require_subcommand(1);
    cue->fallthrough();
    std::string q = "1/2";
    int n = 3;
    std::string spec = "+1,-1";
    auto *correlator = cue->add_subcommand("correlator", "<tau ... tau>(n-1) from the closed resolvents at n");
    correlator->add_option("--q", q, "Q as num/den, 0 <= Q < 1")->capture_default_str();
    correlator->add_option("--n", n, "Lattice point, n >= 1")->check(CLI::PositiveNumber)->capture_default_str();
    correlator->add_option("--spec", spec, "Indices, e.g. +1,-1 (write --spec=-1,+2 when it starts with -)")
        ->capture_default_str();
    correlator->callback([&] {
        action = [&](altau_format f) {
            altau_text *out = nullptr;
            const altau_status s = altau_cue_correlator(q.c_str(), n, spec.c_str(), f, &out);
            return finish(s, out);
        };
    });

    int mmax = 4;
    bool stable_only = false;
    auto *check = cue->add_subcommand("check", "Toeplitz, tau-function, resolvent and correlator checks");
    check->add_option("--q", q, "Q as num/den, 0 <= Q < 1")->capture_default_str();
    check->add_option("--mmax", mmax, "Largest lattice point")->check(CLI::Range(1, 8))->capture_default_str();
    check->add_flag("--stable-only", stable_only, "Skip correlators outside the stable range");
    check->callback([&] {
        action = [&](altau_format f) {
            altau_text *out = nullptr;
            const altau_status s = altau_cue_check(q.c_str(), mmax, stable_only ? 1 : 0, f, &out);
            return finish(s, out);
        };
    });

    int z = 2;
    int zp = 2;
    unsigned long long samples = 0;
    unsigned long long seed = 1;
    auto *lpp = cue->add_subcommand("lpp", "Last-passage percolation CDF against the Toeplitz determinant");
    lpp->add_option("--z", z, "Rows")->check(CLI::Range(1, 3))->capture_default_str();
    lpp->add_option("--zp", zp, "Columns")->check(CLI::Range(1, 3))->capture_default_str();
    lpp->add_option("--n", n, "Threshold")->check(CLI::Range(0, 8))->capture_default_str();
    lpp->add_option("--q", q, "Q as num/den, 0 <= Q < 1")->capture_default_str();
    lpp->add_option("--samples", samples, "Monte Carlo samples (0 = none)")->capture_default_str();
    lpp->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
    lpp->callback([&] {
        action = [&](altau_format f) {
            altau_text *out = nullptr;
            const altau_status s = altau_cue_lpp(z, zp, n, q.c_str(), samples, seed, f, &out);
            return finish(s, out);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }
    if (!action) {
        std::fputs(app.help().c_str(), stderr);
        return exit_usage;
    }
    return action(format == "json" ? ALTAU_FORMAT_JSON : ALTAU_FORMAT_TEXT);
}
