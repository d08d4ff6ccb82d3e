#include <altau/tau_structure.hpp>

#include <cstdlib>
#include <stdexcept>
#include <tuple>

#include "cyclic_engine.hpp"

namespace altau
{

namespace
{

int epsilon(Sign s) { return s == Sign::Minus ? 1 : -1; }

std::string entry_key(const std::vector<int> &indices)
{
    std::string s;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        s += (i ? "," : "") + std::to_string(indices[i]);
    }
    return s;
}

std::string omega_name(DerivIndex a, DerivIndex b) { return "Omega[" + to_string(a) + ";" + to_string(b) + "]"; }

} // namespace

RegimeSeries OmegaTable::generating_series() const
{
    std::vector<int> trunc(signs.size());
    for (std::size_t v = 0; v < signs.size(); ++v) {
        trunc[v] = max_index.at(v) + 1;
    }
    RegimeSeries out(Regime{signs}, trunc);
    for (const auto &[indices, value] : entries) {
        out.add_term(detail::entry_exponents(signs, indices), value);
    }
    return out;
}

void TauReport::record(bool ok, const std::string &what, const Polynomial &witness)
{
    ++checks;
    if (!ok) {
        passed = false;
        failures.push_back({what, witness});
    }
}

struct TauStructure::Impl {
    explicit Impl(Hierarchy &h)
        : engine([&h](Sign s, int i) { return h.resolvent_coefficient(s, i); })
    {
    }

    std::mutex mutex;
    std::map<std::tuple<Sign, int, Sign, int>, Polynomial> pair_traces;
    std::map<std::pair<DerivIndex, DerivIndex>, Polynomial> two_point;

    std::mutex engine_mutex;
    detail::CyclicEngine<Polynomial> engine;
};

TauStructure::TauStructure(Hierarchy &hierarchy) : h_(hierarchy), impl_(std::make_unique<Impl>(hierarchy)) {}

TauStructure::~TauStructure() = default;

Polynomial TauStructure::two_point_coefficient(Sign alpha, Sign beta, int e1, int e2)
{
    const Regime regime{{alpha, beta}};
    const int window = std::abs(e1) + std::abs(e2) + 2;
    const auto kernel = kernel_expand(regime, 0, 1, 2, {window, window});
    Polynomial sum;
    for (const auto &[kexp, coeff] : kernel.terms()) {
        const int i1 = epsilon(alpha) * (e1 - kexp[0]);
        const int i2 = epsilon(beta) * (e2 - kexp[1]);
        if (i1 < 0 || i2 < 0) {
            continue;
        }
        const auto key = std::tuple{alpha, i1, beta, i2};
        Polynomial tr;
        bool cached = false;
        {
            std::lock_guard lock(impl_->mutex);
            auto it = impl_->pair_traces.find(key);
            if (it != impl_->pair_traces.end()) {
                tr = it->second;
                cached = true;
            }
        }
        if (!cached) {
            tr = trace_of_product(h_.resolvent_coefficient(alpha, i1), h_.resolvent_coefficient(beta, i2));
            std::lock_guard lock(impl_->mutex);
            impl_->pair_traces.emplace(key, tr);
        }
        sum += tr * coeff;
    }
    sum -= Polynomial(detail::correction_coefficient(alpha, beta, e1, e2));
    return alpha == beta ? sum : -sum;
}

Polynomial TauStructure::omega_two_point(DerivIndex d1, DerivIndex d2)
{
    if (d1.p < 0 || d2.p < 0) {
        throw std::invalid_argument("derivation index p must be non-negative");
    }
    const auto key = std::pair{d1, d2};
    {
        std::lock_guard lock(impl_->mutex);
        auto it = impl_->two_point.find(key);
        if (it != impl_->two_point.end()) {
            return it->second;
        }
    }
    const auto e = detail::entry_exponents({d1.alpha, d2.alpha}, {d1.p, d2.p});
    Polynomial value = two_point_coefficient(d1.alpha, d2.alpha, e[0], e[1]);
    std::lock_guard lock(impl_->mutex);
    return impl_->two_point.emplace(key, std::move(value)).first->second;
}

Polynomial TauStructure::omega_multi_direct(const CorrelatorSpec &spec)
{
    if (spec.size() < 2) {
        throw std::invalid_argument("a correlator needs at least two indices");
    }
    Polynomial omega = omega_two_point(spec[0], spec[1]);
    for (std::size_t j = 2; j < spec.size(); ++j) {
        omega = h_.apply(spec[j], omega);
    }
    return omega;
}

Polynomial TauStructure::omega_closed_entry(const std::vector<Sign> &signs, const std::vector<int> &indices)
{
    if (signs.size() < 2 || indices.size() != signs.size()) {
        throw std::invalid_argument("closed formula needs k >= 2 signs and one index per sign");
    }
    for (int i : indices) {
        if (i < 0) {
            throw std::invalid_argument("closed formula indices must be non-negative");
        }
    }
    std::lock_guard lock(impl_->engine_mutex);
    return detail::closed_entry(impl_->engine, signs, indices);
}

OmegaTable TauStructure::omega_multi_closed(const std::vector<Sign> &signs, const std::vector<int> &max_index)
{
    if (signs.size() < 2 || max_index.size() != signs.size()) {
        throw std::invalid_argument("closed formula needs k >= 2 signs and one bound per sign");
    }
    OmegaTable table{signs, max_index, {}};
    std::vector<int> idx(signs.size(), 0);
    for (int b : max_index) {
        if (b < 0) {
            throw std::invalid_argument("negative table bound");
        }
    }
    for (;;) {
        table.entries.emplace(idx, omega_closed_entry(signs, idx));
        std::size_t v = 0;
        while (v < idx.size() && idx[v] == max_index[v]) {
            idx[v] = 0;
            ++v;
        }
        if (v == idx.size()) {
            break;
        }
        ++idx[v];
    }
    return table;
}

IdentityCheck TauStructure::check_two_point_support(Sign alpha, Sign beta, int window)
{
    const auto lattice_index = [](Sign s, int e) {
        // e = -(s p + 1)  =>  p = -(e + 1) / s
        return -(e + 1) * sign_value(s);
    };
    for (int e1 = -window; e1 <= window; ++e1) {
        for (int e2 = -window; e2 <= window; ++e2) {
            if (lattice_index(alpha, e1) >= 1 && lattice_index(beta, e2) >= 1) {
                continue;
            }
            auto c = two_point_coefficient(alpha, beta, e1, e2);
            if (!c.is_zero()) {
                return {false, c,
                        std::string(1, sign_char(alpha)) + sign_char(beta) + " at lambda^" + std::to_string(e1) + " mu^" +
                            std::to_string(e2)};
            }
        }
    }
    return {};
}

TauReport TauStructure::verify(int pmax, int qmax, int rmax)
{
    if (pmax < 0 || qmax < 0 || rmax < 0) {
        throw std::invalid_argument("index bounds must be non-negative");
    }
    TauReport report;
    const Sign signs[] = {Sign::Plus, Sign::Minus};
    for (Sign alpha : signs) {
        for (Sign beta : signs) {
            for (int p = 0; p <= pmax; ++p) {
                for (int q = 0; q <= qmax; ++q) {
                    const DerivIndex da{alpha, p};
                    const DerivIndex db{beta, q};
                    const auto omega = omega_two_point(da, db);

                    const auto swapped = omega_two_point(db, da);
                    report.record(omega == swapped, "symmetry " + omega_name(da, db), omega - swapped);

                    const auto lhs = omega.shifted(1) - omega;
                    const auto rhs = h_.apply(db, h_.coefficients(alpha, p).a) * Rational(sign_value(alpha));
                    report.record(lhs == rhs, "(Lambda-1) " + omega_name(da, db), lhs - rhs);

                    for (Sign gamma : signs) {
                        for (int r = 0; r <= rmax; ++r) {
                            const DerivIndex dc{gamma, r};
                            const auto left = h_.apply(dc, omega);
                            const auto right = h_.apply(db, omega_two_point(da, dc));
                            report.record(left == right,
                                          "compatibility D" + to_string(dc) + " " + omega_name(da, db), left - right);
                        }
                    }
                }
            }
        }
    }
    return report;
}

Polynomial omega_two_point(TauStructure &t, DerivIndex d1, DerivIndex d2, int order)
{
    if (d1.p > order - 1 || d2.p > order - 1) {
        throw std::invalid_argument(omega_name(d1, d2) + " needs order " + std::to_string(std::max(d1.p, d2.p) + 1));
    }
    return t.omega_two_point(d1, d2);
}

Polynomial omega_multi_direct(TauStructure &t, const CorrelatorSpec &spec) { return t.omega_multi_direct(spec); }

OmegaTable omega_multi_closed(TauStructure &t, const std::vector<Sign> &signs, const std::vector<int> &max_index)
{
    return t.omega_multi_closed(signs, max_index);
}

TauReport verify_tau_structure(TauStructure &t, int pmax, int qmax, int rmax) { return t.verify(pmax, qmax, rmax); }

TheoremReport check_closed_formula(TauStructure &t, const std::vector<Sign> &signs, int max_index)
{
    if (max_index < 1) {
        throw std::invalid_argument("closed formula check needs max index >= 1");
    }
    TheoremReport report;
    std::vector<int> idx(signs.size(), 1);
    for (;;) {
        CorrelatorSpec spec;
        for (std::size_t v = 0; v < signs.size(); ++v) {
            spec.push_back({signs[v], idx[v]});
        }
        const auto closed = t.omega_closed_entry(signs, idx);
        const auto direct = t.omega_multi_direct(spec);
        ++report.entries;
        if (closed != direct) {
            report.passed = false;
            report.mismatches.push_back(to_string(signs) + " (" + entry_key(idx) + ")");
        }
        std::size_t v = 0;
        while (v < idx.size() && idx[v] == max_index) {
            idx[v] = 1;
            ++v;
        }
        if (v == idx.size()) {
            break;
        }
        ++idx[v];
    }
    return report;
}

} // namespace altau
