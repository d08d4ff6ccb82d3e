#include <altau/checks.hpp>

#include <future>
#include <stdexcept>

#include <altau/cue.hpp>

namespace altau
{

namespace
{

std::string tag(Sign s) { return std::string("R") + sign_char(s); }

std::string order_suffix(int order) { return " up to order " + std::to_string(order); }

bool all_zero_after_first(const std::vector<Polynomial> &v, const Polynomial &first)
{
    if (v.empty() || v[0] != first) {
        return false;
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            return false;
        }
    }
    return true;
}

void require_order(int order)
{
    if (order < 0) {
        throw std::invalid_argument("order must be non-negative");
    }
}

} // namespace

CheckReport check_normalization(Hierarchy &h, Sign sign, int order)
{
    require_order(order);
    const auto bundle = h.resolvent(sign, order);
    const auto &r = bundle.series;
    CheckReport report;
    report.add(tag(sign) + " tr = 1" + order_suffix(order), all_zero_after_first(r.trace(), Polynomial(1)));
    report.add(tag(sign) + " det = 0" + order_suffix(order), all_zero_after_first(r.det(), Polynomial(0)));
    report.add(tag(sign) + " tr(R^2) = 1" + order_suffix(order), all_zero_after_first((r * r).trace(), Polynomial(1)));
    return report;
}

CheckReport check_resolvent_equation(Hierarchy &h, Sign sign, int order)
{
    require_order(order);
    const auto r = PolyLaurentMatrix::from_series(h.resolvent(sign, order).series);
    const auto shifted = r.map([](const Polynomial &f) { return f.shifted(1); });
    const auto u = lax_u();
    const auto residual = shifted * u - u * r;
    const int lo = sign == Sign::Minus ? 0 : 1 - order;
    const int hi = sign == Sign::Minus ? order : 1;
    bool ok = true;
    std::string detail;
    for (int e = lo; e <= hi; ++e) {
        const auto m = residual.at(e);
        if (!m.is_zero()) {
            ok = false;
            detail = "lambda^" + std::to_string(e) + " coefficient is nonzero";
            break;
        }
    }
    CheckReport report;
    report.add(tag(sign) + " resolvent equation" + order_suffix(order), ok, detail);
    return report;
}

CheckReport check_equivariance_suite(Hierarchy &h, int qmax, int order)
{
    CheckReport report;
    for (Sign alpha : {Sign::Minus, Sign::Plus}) {
        for (Sign beta : {Sign::Minus, Sign::Plus}) {
            for (int q = 0; q <= qmax; ++q) {
                const DerivIndex d{beta, q};
                const auto c = h.check_equivariance(d, alpha, order);
                report.add("D" + to_string(d) + " " + tag(alpha) + " = [V, " + tag(alpha) + "]", c.holds,
                           c.holds ? std::string() : c.where);
            }
        }
    }
    return report;
}

CheckReport check_zero_curvature_suite(Hierarchy &h, int qmax)
{
    CheckReport report;
    for (Sign beta : {Sign::Minus, Sign::Plus}) {
        for (int q = 0; q <= qmax; ++q) {
            const DerivIndex d{beta, q};
            const auto c = h.check_zero_curvature(d);
            report.add("D" + to_string(d) + " U = Lambda(V) U - U V", c.holds, c.holds ? std::string() : c.where);
        }
    }
    return report;
}

CheckReport check_commutativity(Hierarchy &h, int pmax)
{
    CheckReport report;
    const Polynomial q = Polynomial::variable(q_var(0));
    const Polynomial r = Polynomial::variable(r_var(0));
    for (Sign alpha : {Sign::Plus, Sign::Minus}) {
        for (Sign beta : {Sign::Plus, Sign::Minus}) {
            for (int p = 0; p <= pmax; ++p) {
                for (int s = 0; s <= pmax; ++s) {
                    const DerivIndex d1{alpha, p};
                    const DerivIndex d2{beta, s};
                    const Polynomial cq = h.commutator(d1, d2, q);
                    const Polynomial cr = h.commutator(d1, d2, r);
                    std::string detail;
                    if (!cq.is_zero()) {
                        detail = "on q[n]: " + cq.to_string();
                    } else if (!cr.is_zero()) {
                        detail = "on r[n]: " + cr.to_string();
                    }
                    report.add("[D" + to_string(d1) + ", D" + to_string(d2) + "] = 0", detail.empty(), detail);
                }
            }
        }
    }
    return report;
}

CheckReport tau_report_lines(const TauReport &report, const std::string &name)
{
    CheckReport out;
    std::string detail = std::to_string(report.checks) + " identities";
    if (!report.failures.empty()) {
        detail += ", " + std::to_string(report.failures.size()) + " failed, first " + report.failures.front().what;
    }
    out.add(name, report.passed, detail);
    return out;
}

std::vector<std::vector<Sign>> all_sign_patterns(int k)
{
    if (k < 1 || k > 16) {
        throw std::invalid_argument("pattern length must lie in 1..16");
    }
    std::vector<std::vector<Sign>> out;
    for (unsigned bits = 0; bits < (1u << k); ++bits) {
        std::vector<Sign> p;
        for (int v = 0; v < k; ++v) {
            p.push_back((bits >> (k - 1 - v)) & 1u ? Sign::Minus : Sign::Plus);
        }
        out.push_back(std::move(p));
    }
    return out;
}

CheckReport check_closed_formula_patterns(TauStructure &t, const std::vector<std::vector<Sign>> &patterns, int max_index)
{
    // Patterns are independent; the shared caches are thread-safe.
    std::vector<std::future<TheoremReport>> jobs;
    for (const auto &p : patterns) {
        jobs.push_back(std::async(std::launch::async, [&t, &p, max_index] { return check_closed_formula(t, p, max_index); }));
    }
    CheckReport report;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        const TheoremReport r = jobs[i].get();
        std::string detail = std::to_string(r.entries) + " entries";
        if (!r.mismatches.empty()) {
            detail += ", first mismatch " + r.mismatches.front();
        }
        report.add("closed formula " + to_string(patterns[i]) + " entries <= " + std::to_string(max_index), r.passed, detail);
    }
    return report;
}

CheckReport verify_all(Hierarchy &h, TauStructure &t, const VerifyOptions &o)
{
    CheckReport report;
    for (Sign s : {Sign::Minus, Sign::Plus}) {
        report.append(check_normalization(h, s, o.resolvent_order));
        report.append(check_resolvent_equation(h, s, o.resolvent_order));
    }
    report.append(check_zero_curvature_suite(h, o.equivariance_max));
    report.append(check_equivariance_suite(h, o.equivariance_max, o.equivariance_order));
    report.append(check_commutativity(h, o.commute_max));
    report.append(tau_report_lines(t.verify(o.tau_pmax, o.tau_qmax, o.tau_rmax), "tau-structure identities"));
    if (o.closed_k3_max >= 1) {
        report.append(check_closed_formula_patterns(t, all_sign_patterns(3), o.closed_k3_max));
    }
    if (o.cue) {
        for (const Rational &Q : {Rational(1, 2), Rational(1, 3)}) {
            const std::string at = " (Q=" + to_display_string(Q) + ")";
            CheckReport cue;
            cue.append(check_partition_polynomial(Q, o.cue_max + 1));
            cue.append(check_partition_constant(Q, 2 * o.cue_max));
            cue.append(tau_relation_checks(Q, o.cue_max));
            cue.append(check_closed_resolvents(Q, o.cue_max + 1, o.cue_max));
            cue.append(check_correlators(Q, 3, 3, o.cue_max, false));
            for (auto &l : cue.lines) {
                l.name += at;
            }
            report.append(cue);
        }
    }
    return report;
}

} // namespace altau
