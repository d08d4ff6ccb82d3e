#include <altau/cue.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include <altau/hierarchy.hpp>

#include "cyclic_engine.hpp"

namespace altau
{

namespace
{

Rational binomial(int n, int k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

std::string at_n(int n) { return " at n=" + std::to_string(n); }

void require_positive_indices(const CorrelatorSpec &spec)
{
    for (const auto &d : spec) {
        if (d.p < 1) {
            throw std::invalid_argument("Toeplitz times need p >= 1, got " + to_string(d));
        }
    }
}

RatMatrix full_matrix(Sign sign, int p, const NumericCoefficients &c)
{
    RatMatrix m{c.a, c.b, c.c, -c.a};
    if (p == 0) {
        if (sign == Sign::Minus) {
            m.e22 += 1;
        } else {
            m.e11 += 1;
        }
    }
    return m;
}

// The times s^{+,1}, s^{-,1} at degree 2 give every first and second derivative the
// tau-function relations need.
struct LowOrderTau {
    Rational z;
    Rational d_plus, d_minus;
    Rational d_pp, d_mm, d_pm;
};

LowOrderTau low_order_tau(const Rational &Q, int m)
{
    const std::vector<DerivIndex> vars{{Sign::Plus, 1}, {Sign::Minus, 1}};
    const auto z = toeplitz_partition({Q, 1, 1}, m, vars, 2);
    const auto l = time_series_log(z);
    return {z.constant_term(),         l.derivative_at_zero({0}),    l.derivative_at_zero({1}),
            l.derivative_at_zero({0, 0}), l.derivative_at_zero({1, 1}), l.derivative_at_zero({0, 1})};
}

} // namespace

void validate_q(const Rational &Q)
{
    if (sgn(Q) < 0 || Q >= 1) {
        throw std::invalid_argument("Q must satisfy 0 <= Q < 1, got " + to_display_string(Q));
    }
}

Rational cue_initial_value(const Rational &Q, int n)
{
    validate_q(Q);
    if (n < 0) {
        throw std::domain_error("initial data is defined for lattice sites n >= 0, got " + std::to_string(n));
    }
    const Rational sign = n % 2 == 0 ? 1 : -1;
    return sign * power(Q, n) * (1 - Q * Q) / (1 - power(Q, 2 * n + 2));
}

std::pair<Rational, Rational> cue_initial_data(const CueParams &params)
{
    const Rational v = cue_initial_value(params.Q, params.n);
    return {v, v};
}

Rational evaluate_at_initial_data(const Polynomial &f, const Rational &Q, int n)
{
    return f.evaluate([&](VarId v) { return cue_initial_value(Q, n + v.offset); });
}

NumericCoefficients cue_coefficients(Sign sign, const Rational &Q, int n, int p)
{
    validate_q(Q);
    if (n < 1) {
        throw std::invalid_argument("closed resolvent forms need n >= 1");
    }
    if (p < 0) {
        throw std::invalid_argument("resolvent order must be non-negative");
    }
    const Rational one_minus_q2 = 1 - Q * Q;
    const Rational denom = (1 - power(Q, 2 * n)) * (1 - power(Q, 2 * n + 2));
    const Rational mq = -Q;
    const auto term = [&](int e, const Rational &factor) -> Rational {
        if (is_zero(factor)) {
            return 0;
        }
        return power(mq, e) * one_minus_q2 * factor / denom;
    };
    const Rational a = term(2 * n - p, 1 - power(Q, 2 * p));
    const Rational long_family = term(n - p - 1, 1 - power(Q, 2 * n + 2 * p + 2));
    const Rational short_family = p >= 1 ? term(n - p + 1, power(Q, 2 * p - 2) - power(Q, 2 * n)) : Rational(0);
    if (sign == Sign::Minus) {
        return {a, long_family, short_family};
    }
    return {-a, short_family, long_family};
}

RatMatrixSeries NumericResolvent::series() const { return RatMatrixSeries(series_direction(sign), coeffs); }

NumericResolvent cue_resolvent(Sign sign, const CueParams &params, int order)
{
    if (order < 0) {
        throw std::invalid_argument("resolvent order must be non-negative");
    }
    NumericResolvent out{sign, order, {}};
    for (int p = 0; p <= order; ++p) {
        out.coeffs.push_back(full_matrix(sign, p, cue_coefficients(sign, params.Q, params.n, p)));
    }
    return out;
}

bool check_numeric_resolvent_equation(Sign sign, const CueParams &params, int order)
{
    const auto here = cue_resolvent(sign, params, order);
    const auto next = cue_resolvent(sign, {params.Q, params.n + 1}, order);
    const Rational q = cue_initial_value(params.Q, params.n);
    const Rational r = q;
    // U = U0 + lambda U1
    const RatMatrix u0{0, r, 0, 1};
    const RatMatrix u1{1, 0, q, 0};
    const auto coeff = [&](const NumericResolvent &res, int p) {
        return (p < 0 || p > order) ? RatMatrix{} : res.coeffs[static_cast<std::size_t>(p)];
    };
    // Minus: lambda^p picks R_p U0 + R_{p-1} U1. Plus: lambda^{-p} picks R_p U0 + R_{p+1} U1.
    const int lo = sign == Sign::Minus ? 0 : -1;
    const int hi = sign == Sign::Minus ? order : order - 1;
    const int step = sign == Sign::Minus ? -1 : 1;
    for (int p = lo; p <= hi; ++p) {
        const RatMatrix lhs = coeff(next, p) * u0 + coeff(next, p + step) * u1;
        const RatMatrix rhs = u0 * coeff(here, p) + u1 * coeff(here, p + step);
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

TimeSeries toeplitz_partition(const ToeplitzSymbol &symbol, int n, const std::vector<DerivIndex> &vars, int degree)
{
    validate_q(symbol.Q);
    if (n < 0 || degree < 0) {
        throw std::invalid_argument("Toeplitz size and degree must be non-negative");
    }
    if (symbol.z < 0 || symbol.zprime < 0) {
        throw std::invalid_argument("symbol exponents must be non-negative");
    }
    require_positive_indices(vars);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            if (vars[i] == vars[j]) {
                throw std::invalid_argument("repeated time variable " + to_string(vars[i]));
            }
        }
    }
    const TimeSeries zero(vars, degree);
    if (n == 0) {
        return TimeSeries(vars, degree, 1);
    }

    // Laurent coefficients psi_k as series in the times.
    std::map<int, TimeSeries> psi;
    for (int a = 0; a <= symbol.z; ++a) {
        for (int b = 0; b <= symbol.zprime; ++b) {
            const Rational c = binomial(symbol.z, a) * binomial(symbol.zprime, b) * power(symbol.Q, a + b);
            auto [it, inserted] = psi.try_emplace(a - b, zero);
            it->second += TimeSeries(vars, degree, c);
        }
    }
    for (std::size_t v = 0; v < vars.size(); ++v) {
        const int step = sign_value(vars[v].alpha) * vars[v].p;
        std::map<int, TimeSeries> next;
        TimeSeries::Exponents e(vars.size(), 0);
        for (int j = 0; j <= degree; ++j) {
            e[v] = j;
            TimeSeries mono(vars, degree);
            mono.add_term(e, Rational(1) / factorial(j));
            for (const auto &[k, s] : psi) {
                auto [it, inserted] = next.try_emplace(k + j * step, zero);
                it->second += s * mono;
            }
        }
        psi = std::move(next);
    }

    std::vector<std::vector<TimeSeries>> m(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
        for (int c = 0; c < n; ++c) {
            auto it = psi.find(c - l);
            m[static_cast<std::size_t>(l)].push_back(it == psi.end() ? zero : it->second);
        }
    }
    TimeSeries det(vars, degree, 1);
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t col = 0; col < un; ++col) {
        std::size_t pivot = col;
        while (pivot < un && is_zero(m[pivot][col].constant_term())) {
            ++pivot;
        }
        if (pivot == un) {
            throw std::domain_error("Toeplitz matrix is singular at s = 0");
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det *= Rational(-1);
        }
        det = det * m[col][col];
        const TimeSeries inv = m[col][col].inverse();
        for (std::size_t row = col + 1; row < un; ++row) {
            const TimeSeries factor = m[row][col] * inv;
            for (std::size_t c = col; c < un; ++c) {
                m[row][c] -= factor * m[col][c];
            }
        }
    }
    return det;
}

TimeSeries toeplitz_tau(const CueParams &params, const std::vector<DerivIndex> &vars, int degree)
{
    return time_series_log(toeplitz_partition({params.Q, 1, 1}, params.n, vars, degree));
}

bool in_stable_range(const CorrelatorSpec &spec, int n)
{
    int plus = 0;
    int minus = 0;
    for (const auto &d : spec) {
        (d.alpha == Sign::Plus ? plus : minus) += d.p;
    }
    return plus <= n && minus <= n;
}

Rational cue_correlator_mr(const CorrelatorSpec &spec, const CueParams &params)
{
    if (spec.size() < 2) {
        throw std::invalid_argument("a correlator needs at least two indices");
    }
    validate_q(params.Q);
    if (params.n < 1) {
        throw std::invalid_argument("closed resolvent forms need n >= 1");
    }
    std::vector<Sign> signs;
    std::vector<int> indices;
    for (const auto &d : spec) {
        if (d.p < 0) {
            throw std::invalid_argument("derivation index p must be non-negative");
        }
        if (d.p == 0) {
            return 0;
        }
        signs.push_back(d.alpha);
        indices.push_back(d.p);
    }
    detail::CyclicEngine<Rational> engine([&](Sign s, int p) {
        return full_matrix(s, p, cue_coefficients(s, params.Q, params.n, p));
    });
    return detail::closed_entry(engine, signs, indices, true);
}

Rational cue_correlator_oracle(const CorrelatorSpec &spec, int m, const Rational &Q, int degree)
{
    if (spec.empty()) {
        throw std::invalid_argument("empty correlator spec");
    }
    require_positive_indices(spec);
    if (degree < static_cast<int>(spec.size())) {
        throw std::invalid_argument("series degree must be at least the number of derivatives");
    }
    std::vector<DerivIndex> vars;
    std::vector<std::size_t> positions;
    for (const auto &d : spec) {
        auto it = std::find(vars.begin(), vars.end(), d);
        if (it == vars.end()) {
            vars.push_back(d);
            it = vars.end() - 1;
        }
        positions.push_back(static_cast<std::size_t>(it - vars.begin()));
    }
    return toeplitz_tau({Q, m}, vars, degree).derivative_at_zero(positions);
}

CheckReport check_partition_polynomial(const Rational &Q, int nmax)
{
    CheckReport report;
    const Rational one_minus_q2 = 1 - Q * Q;
    const std::vector<DerivIndex> vars{{Sign::Plus, 1}};
    for (int n = 0; n <= nmax; ++n) {
        const int degree = std::max(nmax, n + 1);
        const auto z = toeplitz_partition({Q, 1, 1}, n, vars, degree);
        bool ok = true;
        for (int l = 0; l <= degree; ++l) {
            const Rational expected =
                l <= n ? power(Q, l) / factorial(l) * (1 - power(Q, 2 * n + 2 - 2 * l)) / one_minus_q2 : Rational(0);
            ok = ok && z.coefficient({l}) == expected;
        }
        report.add("Z(n, s+1) polynomial" + at_n(n), ok);
    }
    return report;
}

CheckReport check_partition_constant(const Rational &Q, int nmax)
{
    CheckReport report;
    for (int n = 0; n <= nmax; ++n) {
        const Rational z = toeplitz_partition({Q, 1, 1}, n, {}, 0).constant_term();
        const Rational expected = (1 - power(Q, 2 * n + 2)) / (1 - Q * Q);
        report.add("Z(n, 0) closed form" + at_n(n), z == expected, to_display_string(z));
    }
    return report;
}

CheckReport tau_relation_checks(const Rational &Q, int mmax)
{
    validate_q(Q);
    if (mmax < 1) {
        throw std::invalid_argument("mmax must be at least 1");
    }
    CheckReport report;
    std::vector<LowOrderTau> tau;
    for (int m = 0; m <= mmax + 2; ++m) {
        tau.push_back(low_order_tau(Q, m));
    }
    const auto qv = [&](int m) { return cue_initial_value(Q, m); };
    for (int m = 1; m <= mmax; ++m) {
        const auto &t = tau[static_cast<std::size_t>(m)];
        const Rational ratio = tau[static_cast<std::size_t>(m) + 1].z * tau[static_cast<std::size_t>(m) - 1].z / (t.z * t.z);
        report.add("Z(m+1)Z(m-1)/Z(m)^2 = 1 - q r" + at_n(m), ratio == 1 - qv(m) * qv(m), to_display_string(ratio));
        report.add("2-Toda" + at_n(m), ratio == t.d_pm, to_display_string(t.d_pm));

        const auto &t1 = tau[static_cast<std::size_t>(m) + 1];
        report.add("(Lambda-1) dlogZ/ds+1 = -q(m) r(m+1)" + at_n(m), t1.d_plus - t.d_plus == -qv(m) * qv(m + 1));
        report.add("(Lambda-1) dlogZ/ds-1 = -q(m+1) r(m)" + at_n(m), t1.d_minus - t.d_minus == -qv(m + 1) * qv(m));
    }
    if (is_zero(Q)) {
        return report;
    }
    for (int n = 1; n <= mmax; ++n) {
        const auto &t0 = tau[static_cast<std::size_t>(n)];
        const auto &t1 = tau[static_cast<std::size_t>(n) + 1];
        const auto &t2 = tau[static_cast<std::size_t>(n) + 2];
        const Rational toda = t2.z * t0.z / (t1.z * t1.z);
        const Rational gap = t2.z * t0.z - t1.z * t1.z;
        const Rational r_ratio = qv(n + 1) / qv(n);
        const Rational q_ratio = r_ratio;

        report.add("r(n+1)/r(n) closed form" + at_n(n),
                   r_ratio == -Q * (1 - power(Q, 2 * n + 2)) / (1 - power(Q, 2 * n + 4)));
        report.add("r(n+1)/r(n) from tau, minus times" + at_n(n),
                   toda * (tau[static_cast<std::size_t>(n) + 2].d_minus - t1.d_minus) / t1.d_mm == r_ratio);
        report.add("q(n+1)/q(n) from tau, plus times" + at_n(n),
                   toda * (tau[static_cast<std::size_t>(n) + 2].d_plus - t1.d_plus) / t1.d_pp == q_ratio);
        // These forms give the reciprocal ratios of the other field.
        report.add("q(n)/q(n+1) from tau gap, plus time" + at_n(n), t1.z * t1.z * (t1.d_plus - t0.d_plus) / gap == 1 / q_ratio);
        report.add("r(n)/r(n+1) from tau gap, minus time" + at_n(n),
                   t1.z * t1.z * (t1.d_minus - t0.d_minus) / gap == 1 / r_ratio);
    }
    return report;
}

CheckReport check_closed_resolvents(const Rational &Q, int nmax, int order)
{
    validate_q(Q);
    CheckReport report;
    Hierarchy h;
    for (Sign sign : {Sign::Minus, Sign::Plus}) {
        const std::string tag = std::string("R") + sign_char(sign);
        for (int n = 1; n <= nmax; ++n) {
            NumericResolvent res;
            try {
                res = cue_resolvent(sign, {Q, n}, order);
            } catch (const std::domain_error &) {
                continue;
            }
            const auto s = res.series();
            const auto tr = s.trace();
            const auto det = s.det();
            bool normalized = tr[0] == 1;
            for (int p = 0; p <= order; ++p) {
                normalized = normalized && (p == 0 || is_zero(tr[static_cast<std::size_t>(p)])) &&
                             is_zero(det[static_cast<std::size_t>(p)]);
            }
            report.add(tag + " tr = 1, det = 0" + at_n(n), normalized);
            bool equation = true;
            try {
                equation = check_numeric_resolvent_equation(sign, {Q, n}, order);
            } catch (const std::domain_error &) {
            }
            report.add(tag + " resolvent equation" + at_n(n), equation);

            int compared = 0;
            bool generic = true;
            for (int p = 0; p <= order; ++p) {
                const auto &c = h.coefficients(sign, p);
                const int lowest = std::min({c.a.offset_range().first, c.b.offset_range().first, c.c.offset_range().first});
                if (n + lowest < 0) {
                    continue;
                }
                const auto &num = res.coeffs[static_cast<std::size_t>(p)];
                const RatMatrix expected = full_matrix(sign, p,
                                                       {evaluate_at_initial_data(c.a, Q, n), evaluate_at_initial_data(c.b, Q, n),
                                                        evaluate_at_initial_data(c.c, Q, n)});
                generic = generic && num == expected;
                ++compared;
            }
            report.add(tag + " closed form = generic at initial data" + at_n(n), generic,
                       std::to_string(compared) + " orders compared");
        }
    }
    return report;
}

CheckReport check_correlators(const Rational &Q, int kmax, int imax, int nmax, bool include_boundary)
{
    validate_q(Q);
    if (kmax < 2 || imax < 1 || nmax < 1) {
        throw std::invalid_argument("correlator check needs kmax >= 2, imax >= 1, nmax >= 1");
    }
    CheckReport report;
    std::vector<DerivIndex> vars;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        for (int p = 1; p <= imax; ++p) {
            vars.push_back({s, p});
        }
    }
    for (int n = 1; n <= nmax; ++n) {
        const auto log_z = toeplitz_tau({Q, n - 1}, vars, kmax);
        for (int k = 2; k <= kmax; ++k) {
            // [0] stable range, [1] boundary
            int total[2] = {0, 0};
            int failed[2] = {0, 0};
            std::string first_failure[2];
            std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
            bool done = false;
            // Odometer over ordered k-tuples of times.
            const auto advance = [&] {
                std::size_t j = 0;
                while (j < choice.size() && choice[j] + 1 == vars.size()) {
                    choice[j] = 0;
                    ++j;
                }
                if (j == choice.size()) {
                    done = true;
                } else {
                    ++choice[j];
                }
            };
            while (!done) {
                CorrelatorSpec spec;
                for (auto c : choice) {
                    spec.push_back(vars[c]);
                }
                const int g = in_stable_range(spec, n) ? 0 : 1;
                if (g == 1 && !include_boundary) {
                    advance();
                    continue;
                }
                const Rational mr = cue_correlator_mr(spec, {Q, n});
                const Rational oracle = log_z.derivative_at_zero(choice);
                ++total[g];
                if (mr != oracle) {
                    ++failed[g];
                    if (first_failure[g].empty()) {
                        first_failure[g] = to_string(spec) + ": " + to_display_string(mr) + " vs " + to_display_string(oracle);
                    }
                }
                advance();
            }
            const char *label[2] = {" stable", " boundary"};
            for (int g = 0; g < 2; ++g) {
                if (total[g] == 0) {
                    continue;
                }
                std::string detail = std::to_string(total[g] - failed[g]) + "/" + std::to_string(total[g]) + " agree";
                if (failed[g] > 0) {
                    detail += ", first " + first_failure[g];
                }
                report.add("k=" + std::to_string(k) + label[g] + " correlators" + at_n(n), failed[g] == 0, detail);
            }
        }
    }
    return report;
}

LppReport lpp_cdf_check(int z, int zprime, int n, const Rational &Q, std::uint64_t samples, std::uint64_t seed)
{
    validate_q(Q);
    if (z < 1 || z > 3 || zprime < 1 || zprime > 3) {
        throw std::invalid_argument("lattice sides must lie in 1..3");
    }
    if (n < 0 || n > 8) {
        throw std::invalid_argument("n must lie in 0..8");
    }
    LppReport out;
    out.z = z;
    out.zprime = zprime;
    out.n = n;
    out.Q = Q;
    const Rational q2 = Q * Q;
    out.toeplitz = power(1 - q2, z * zprime) * toeplitz_partition({Q, z, zprime}, n, {}, 0).constant_term();

    // Row-by-row over the z x z' lattice; the state holds the latest passage time in each
    // column, and any state exceeding n is dropped since passage times only grow.
    std::map<std::vector<int>, Rational> states{{std::vector<int>(static_cast<std::size_t>(zprime), 0), 1}};
    for (int i = 0; i < z; ++i) {
        for (int j = 0; j < zprime; ++j) {
            std::map<std::vector<int>, Rational> next;
            for (const auto &[state, prob] : states) {
                const int up = i > 0 ? state[static_cast<std::size_t>(j)] : 0;
                const int left = j > 0 ? state[static_cast<std::size_t>(j) - 1] : 0;
                const int base = std::max(up, left);
                Rational weight = prob * (1 - q2);
                for (int x = 0; base + x <= n; ++x) {
                    auto s = state;
                    s[static_cast<std::size_t>(j)] = base + x;
                    next[s] += weight;
                    weight *= q2;
                }
            }
            states = std::move(next);
        }
    }
    for (const auto &[state, prob] : states) {
        out.probability += prob;
    }
    out.truncation_bound = 0;
    out.agree = out.toeplitz == out.probability;

    if (samples > 0) {
        if (!q2.get_den().fits_ulong_p() || !q2.get_num().fits_ulong_p()) {
            throw std::invalid_argument("Monte Carlo sampling needs Q^2 with a 64-bit denominator");
        }
        const std::uint64_t num = q2.get_num().get_ui();
        const std::uint64_t den = q2.get_den().get_ui();
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> uniform(0, den - 1);
        std::vector<int> g(static_cast<std::size_t>(zprime));
        for (std::uint64_t s = 0; s < samples; ++s) {
            std::fill(g.begin(), g.end(), 0);
            for (int i = 0; i < z; ++i) {
                for (int j = 0; j < zprime; ++j) {
                    int x = 0;
                    while (uniform(rng) < num) {
                        ++x;
                    }
                    const int up = i > 0 ? g[static_cast<std::size_t>(j)] : 0;
                    const int left = j > 0 ? g[static_cast<std::size_t>(j) - 1] : 0;
                    g[static_cast<std::size_t>(j)] = std::max(up, left) + x;
                }
            }
            if (g.back() <= n) {
                ++out.hits;
            }
        }
        out.samples = samples;
    }
    return out;
}

} // namespace altau
