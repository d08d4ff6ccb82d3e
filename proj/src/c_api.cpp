#include <altau/altau.h>

#include <exception>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include <altau/checks.hpp>
#include <altau/cue.hpp>
#include <altau/encoding.hpp>
#include <altau/hierarchy.hpp>
#include <altau/tau_structure.hpp>

struct altau_context {
    altau::Hierarchy hierarchy;
    altau::TauStructure tau{hierarchy};
};

struct altau_poly {
    altau::Polynomial value;
};

struct altau_text {
    std::string value;
};

namespace
{

using namespace altau;

thread_local std::string last_error;

altau_status fail(altau_status status, const std::string &message)
{
    last_error = message;
    return status;
}

template <typename F>
altau_status guard(F &&body) noexcept
{
    try {
        last_error.clear();
        return body();
    } catch (const std::invalid_argument &e) {
        return fail(ALTAU_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error &e) {
        return fail(ALTAU_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range &e) {
        return fail(ALTAU_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(ALTAU_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(ALTAU_INTERNAL, e.what());
    } catch (...) {
        return fail(ALTAU_INTERNAL, "unknown error");
    }
}

void require(const void *p, const char *name)
{
    if (p == nullptr) {
        throw std::invalid_argument(std::string(name) + " must not be NULL");
    }
}

void require_format(altau_format f)
{
    if (f != ALTAU_FORMAT_JSON && f != ALTAU_FORMAT_TEXT) {
        throw std::invalid_argument("unknown output format");
    }
}

Sign sign_arg(char c, const char *name)
{
    if (c != '+' && c != '-') {
        throw std::invalid_argument(std::string(name) + " must be '+' or '-'");
    }
    return parse_sign(c);
}

VarKind kind_arg(char c, const char *name)
{
    if (c != 'q' && c != 'r') {
        throw std::invalid_argument(std::string(name) + " must be 'q' or 'r'");
    }
    return c == 'q' ? VarKind::Q : VarKind::R;
}

Rational q_arg(const char *q)
{
    require(q, "q");
    const Rational Q = parse_rational(q);
    validate_q(Q);
    return Q;
}

altau_status emit(std::string s, altau_text **out, altau_status status = ALTAU_OK)
{
    *out = new altau_text{std::move(s)};
    return status;
}

altau_status emit_poly(Polynomial f, altau_poly **out)
{
    *out = new altau_poly{std::move(f)};
    return ALTAU_OK;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string report_text(const CheckReport &r)
{
    std::ostringstream os;
    int passed = 0;
    for (const auto &l : r.lines) {
        os << (l.passed ? "PASS " : "FAIL ") << l.name;
        if (!l.detail.empty()) {
            os << " (" << l.detail << ")";
        }
        os << "\n";
        passed += l.passed ? 1 : 0;
    }
    os << passed << "/" << r.lines.size() << " checks passed\n";
    return os.str();
}

altau_status emit_report(const CheckReport &r, altau_format format, altau_text **out)
{
    const altau_status status = r.passed() ? ALTAU_OK : ALTAU_CHECK_FAILED;
    return emit(format == ALTAU_FORMAT_JSON ? dump(report_to_json(r)) : report_text(r), out, status);
}

} // namespace

extern "C" {

const char *altau_version(void) { return "0.1.0"; }

const char *altau_status_string(altau_status status)
{
    switch (status) {
    case ALTAU_OK:
        return "ok";
    case ALTAU_CHECK_FAILED:
        return "check failed";
    case ALTAU_INVALID_ARGUMENT:
        return "invalid argument";
    case ALTAU_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *altau_last_error(void) { return last_error.c_str(); }

altau_status altau_context_create(altau_context **out)
{
    return guard([&] {
        require(out, "out");
        *out = new altau_context();
        return ALTAU_OK;
    });
}

void altau_context_free(altau_context *ctx) { delete ctx; }

const char *altau_text_data(const altau_text *text) { return text == nullptr ? "" : text->value.c_str(); }

size_t altau_text_size(const altau_text *text) { return text == nullptr ? 0 : text->value.size(); }

void altau_text_free(altau_text *text) { delete text; }

altau_status altau_poly_parse(const char *text, altau_poly **out)
{
    return guard([&] {
        require(text, "text");
        require(out, "out");
        return emit_poly(parse_polynomial(text), out);
    });
}

altau_status altau_poly_from_json(const char *json, altau_poly **out)
{
    return guard([&] {
        require(json, "json");
        require(out, "out");
        const Json j = Json::parse(json, nullptr, false);
        if (j.is_discarded()) {
            throw std::invalid_argument("input is not valid JSON");
        }
        return emit_poly(polynomial_from_json(j), out);
    });
}

altau_status altau_poly_constant(const char *rational, altau_poly **out)
{
    return guard([&] {
        require(rational, "rational");
        require(out, "out");
        return emit_poly(Polynomial(parse_rational(rational)), out);
    });
}

altau_status altau_poly_variable(char kind, int offset, altau_poly **out)
{
    return guard([&] {
        require(out, "out");
        if (offset > Monomial::max_offset || offset < -Monomial::max_offset) {
            throw std::invalid_argument("variable offset out of range");
        }
        return emit_poly(Polynomial::variable({kind_arg(kind, "kind"), offset}), out);
    });
}

altau_status altau_poly_arith(const altau_poly *a, const altau_poly *b, altau_arith op, altau_poly **out)
{
    return guard([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        if (op != ALTAU_ADD && op != ALTAU_SUB && op != ALTAU_MUL) {
            throw std::invalid_argument("unknown arithmetic operation");
        }
        return emit_poly(poly_arith(a->value, b->value, static_cast<ArithOp>(op)), out);
    });
}

altau_status altau_poly_shift(const altau_poly *f, int k, altau_poly **out)
{
    return guard([&] {
        require(f, "f");
        require(out, "out");
        return emit_poly(shift(f->value, k), out);
    });
}

int altau_poly_equal(const altau_poly *a, const altau_poly *b)
{
    if (a == nullptr || b == nullptr) {
        return -1;
    }
    return a->value == b->value ? 1 : 0;
}

altau_status altau_poly_to_json(const altau_poly *f, altau_text **out)
{
    return guard([&] {
        require(f, "f");
        require(out, "out");
        return emit(polynomial_to_json(f->value).dump(), out);
    });
}

altau_status altau_poly_to_string(const altau_poly *f, altau_text **out)
{
    return guard([&] {
        require(f, "f");
        require(out, "out");
        return emit(f->value.to_string(), out);
    });
}

void altau_poly_free(altau_poly *f) { delete f; }

altau_status altau_apply_derivation(altau_context *ctx, char alpha, int p, const altau_poly *f, altau_poly **out)
{
    return guard([&] {
        require(ctx, "ctx");
        require(f, "f");
        require(out, "out");
        if (p < 0) {
            throw std::invalid_argument("p must be non-negative");
        }
        return emit_poly(ctx->hierarchy.apply({sign_arg(alpha, "alpha"), p}, f->value), out);
    });
}

altau_status altau_t_flow(altau_context *ctx, const altau_poly *f, altau_poly **out)
{
    return guard([&] {
        require(ctx, "ctx");
        require(f, "f");
        require(out, "out");
        return emit_poly(ctx->hierarchy.t_flow(f->value), out);
    });
}

altau_status altau_resolvent(altau_context *ctx, char sign, int order, altau_format format, altau_text **out)
{
    return guard([&] {
        require(ctx, "ctx");
        require(out, "out");
        require_format(format);
        if (order < 0) {
            throw std::invalid_argument("order must be non-negative");
        }
        const auto bundle = ctx->hierarchy.resolvent(sign_arg(sign, "sign"), order);
        if (format == ALTAU_FORMAT_JSON) {
            return emit(dump(resolvent_to_json(bundle)), out);
        }
        std::ostringstream os;
        for (int p = 0; p <= order; ++p) {
            const auto i = static_cast<std::size_t>(p);
            const int e = bundle.sign == Sign::Minus ? p : -p;
            os << "R" << sign_char(bundle.sign) << " lambda^" << e << ":\n"
               << "  a = " << bundle.a[i].to_string() << "\n"
               << "  b = " << bundle.b[i].to_string() << "\n"
               << "  c = " << bundle.c[i].to_string() << "\n";
        }
        return emit(os.str(), out);
    });
}

altau_status altau_flow(altau_context *ctx, char alpha, int p, char target, altau_format format, altau_text **out)
{
    return guard([&] {
        require(ctx, "ctx");
        require(out, "out");
        require_format(format);
        if (p < 0) {
            throw std::invalid_argument("p must be non-negative");
        }
        FlowRecord flow{{sign_arg(alpha, "alpha"), p}, kind_arg(target, "target"), {}};
        flow.image = ctx->hierarchy.generator_image(flow.d, flow.target);
        if (format == ALTAU_FORMAT_JSON) {
            return emit(dump(flow_to_json(flow)), out);
        }
        return emit("D" + to_string(flow.d) + " " + variable_name({flow.target, 0}) + " = " + flow.image.to_string() + "\n",
                    out);
    });
}

altau_status altau_omega(altau_context *ctx, const char *pattern, int max, altau_format format, altau_text **out)
{
    return guard([&] {
        require(ctx, "ctx");
        require(pattern, "pattern");
        require(out, "out");
        require_format(format);
        const auto signs = parse_sign_pattern(pattern);
        if (signs.size() < 2) {
            throw std::invalid_argument("pattern needs at least two signs");
        }
        if (max < 0) {
            throw std::invalid_argument("max must be non-negative");
        }
        const auto table = ctx->tau.omega_multi_closed(signs, std::vector<int>(signs.size(), max));
        if (format == ALTAU_FORMAT_JSON) {
            return emit(dump(omega_table_to_json(table)), out);
        }
        std::ostringstream os;
        for (const auto &[idx, f] : table.entries) {
            os << "Omega" << to_string(table.signs) << "[" << index_key(idx) << "] = " << f.to_string() << "\n";
        }
        return emit(os.str(), out);
    });
}

altau_status altau_verify_tau(altau_context *ctx, int pmax, int qmax, int rmax, altau_format format, altau_text **out)
{
    return guard([&] {
        require(ctx, "ctx");
        require(out, "out");
        require_format(format);
        if (pmax < 0 || qmax < 0 || rmax < 0) {
            throw std::invalid_argument("index bounds must be non-negative");
        }
        const auto r = ctx->tau.verify(pmax, qmax, rmax);
        CheckReport report = tau_report_lines(r, "tau-structure identities");
        for (const auto &f : r.failures) {
            report.add(f.what, false, f.witness.to_string());
        }
        return emit_report(report, format, out);
    });
}

altau_status altau_theorem_check(altau_context *ctx, int k, const char *pattern, int max, altau_format format,
                                 altau_text **out)
{
    return guard([&] {
        require(ctx, "ctx");
        require(out, "out");
        require_format(format);
        if (max < 1) {
            throw std::invalid_argument("max must be at least 1");
        }
        std::vector<std::vector<Sign>> patterns;
        if (pattern != nullptr && *pattern != '\0') {
            patterns.push_back(parse_sign_pattern(pattern));
            if (k != 0 && static_cast<int>(patterns[0].size()) != k) {
                throw std::invalid_argument("pattern length does not match k");
            }
        } else {
            if (k < 2) {
                throw std::invalid_argument("k must be at least 2");
            }
            patterns = all_sign_patterns(k);
        }
        if (patterns[0].size() < 2) {
            throw std::invalid_argument("pattern needs at least two signs");
        }
        return emit_report(check_closed_formula_patterns(ctx->tau, patterns, max), format, out);
    });
}

altau_status altau_verify_all(altau_context *ctx, int quick, altau_format format, altau_text **out)
{
    return guard([&] {
        require(ctx, "ctx");
        require(out, "out");
        require_format(format);
        VerifyOptions o;
        if (quick != 0) {
            o.resolvent_order = 4;
            o.equivariance_max = 2;
            o.equivariance_order = 3;
            o.commute_max = 2;
            o.tau_pmax = 2;
            o.tau_qmax = 2;
            o.tau_rmax = 1;
            o.closed_k3_max = 1;
            o.cue_max = 2;
        }
        return emit_report(verify_all(ctx->hierarchy, ctx->tau, o), format, out);
    });
}

altau_status altau_cue_correlator(const char *q, int n, const char *spec, altau_format format, altau_text **out)
{
    return guard([&] {
        require(spec, "spec");
        require(out, "out");
        require_format(format);
        const Rational Q = q_arg(q);
        const CorrelatorSpec s = parse_correlator_spec(spec);
        if (s.size() < 2) {
            throw std::invalid_argument("a correlator needs at least two indices");
        }
        const Rational value = cue_correlator_mr(s, {Q, n});
        bool has_p0 = false;
        for (const auto &d : s) {
            has_p0 = has_p0 || d.p == 0;
        }
        // Times s^{+-,0} are not Toeplitz times; those correlators vanish identically.
        const Rational oracle = has_p0 ? Rational(0) : cue_correlator_oracle(s, n - 1, Q, static_cast<int>(s.size()));
        const bool stable = in_stable_range(s, n);
        if (format == ALTAU_FORMAT_JSON) {
            return emit(dump({{"spec", to_string(s)},
                              {"q", rational_to_json(Q)},
                              {"n", n},
                              {"value", rational_to_json(value)},
                              {"oracle", rational_to_json(oracle)},
                              {"agree", value == oracle},
                              {"stable", stable}}),
                        out);
        }
        std::ostringstream os;
        os << to_display_string(value) << "\n"
           << "oracle " << to_display_string(oracle) << (value == oracle ? " (agree" : " (differ")
           << (stable ? ", stable range)" : ", boundary range)") << "\n";
        return emit(os.str(), out);
    });
}

altau_status altau_cue_check(const char *q, int mmax, int stable_only, altau_format format, altau_text **out)
{
    return guard([&] {
        require(out, "out");
        require_format(format);
        const Rational Q = q_arg(q);
        if (mmax < 1 || mmax > 8) {
            throw std::invalid_argument("mmax must lie in 1..8");
        }
        CheckReport report;
        report.append(check_partition_polynomial(Q, mmax + 1));
        report.append(check_partition_constant(Q, 2 * mmax));
        report.append(tau_relation_checks(Q, mmax));
        report.append(check_closed_resolvents(Q, mmax + 1, mmax));
        if (!is_zero(Q)) {
            report.append(check_correlators(Q, 3, 3, mmax, stable_only == 0));
        }
        return emit_report(report, format, out);
    });
}

altau_status altau_cue_lpp(int z, int zprime, int n, const char *q, unsigned long long samples,
                           unsigned long long seed, altau_format format, altau_text **out)
{
    return guard([&] {
        require(out, "out");
        require_format(format);
        const Rational Q = q_arg(q);
        const LppReport r = lpp_cdf_check(z, zprime, n, Q, samples, seed);
        const altau_status status = r.agree ? ALTAU_OK : ALTAU_CHECK_FAILED;
        if (format == ALTAU_FORMAT_JSON) {
            Json j{{"z", r.z},
                   {"zprime", r.zprime},
                   {"n", r.n},
                   {"q", rational_to_json(r.Q)},
                   {"toeplitz", rational_to_json(r.toeplitz)},
                   {"probability", rational_to_json(r.probability)},
                   {"truncation_bound", rational_to_json(r.truncation_bound)},
                   {"agree", r.agree}};
            if (r.samples > 0) {
                j["samples"] = r.samples;
                j["hits"] = r.hits;
            }
            return emit(dump(j), out, status);
        }
        std::ostringstream os;
        os << "P(L <= " << r.n << ") = " << to_display_string(r.probability) << "\n"
           << "(1-Q^2)^(z z') Z(n, 0) = " << to_display_string(r.toeplitz) << (r.agree ? " (agree)" : " (differ)") << "\n";
        if (r.samples > 0) {
            os << "Monte Carlo: " << r.hits << "/" << r.samples << "\n";
        }
        return emit(os.str(), out, status);
    });
}

} // extern "C"
