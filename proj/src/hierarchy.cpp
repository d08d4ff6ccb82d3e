#include <altau/hierarchy.hpp>

#include <stdexcept>

namespace altau
{

namespace
{

void check_index(DerivIndex d)
{
    if (d.p < 0) {
        throw std::invalid_argument("derivation index p must be non-negative");
    }
}

std::string entry_name(int row, int col) { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }

IdentityCheck compare(const PolyMatrix &lhs, const PolyMatrix &rhs, const std::string &context)
{
    const PolyMatrix diff = lhs - rhs;
    const Polynomial *entries[] = {&diff.e11, &diff.e12, &diff.e21, &diff.e22};
    for (int i = 0; i < 4; ++i) {
        if (!entries[i]->is_zero()) {
            return {false, *entries[i], context + " entry " + entry_name(i / 2 + 1, i % 2 + 1)};
        }
    }
    return {};
}

} // namespace

Hierarchy::Hierarchy() : minus_(Sign::Minus), plus_(Sign::Plus) {}

const ResolventCoefficients &Hierarchy::coefficients(Sign sign, int p)
{
    if (p < 0) {
        throw std::invalid_argument("resolvent order must be non-negative");
    }
    std::lock_guard lock(mutex_);
    auto &b = builder(sign);
    b.extend_to(p);
    return b.at(p);
}

PolyMatrix Hierarchy::resolvent_coefficient(Sign sign, int p) { return resolvent_matrix(sign, p, coefficients(sign, p)); }

ResolventBundle Hierarchy::resolvent(Sign sign, int order)
{
    ResolventAbc abc;
    for (int p = 0; p <= order; ++p) {
        const auto &c = coefficients(sign, p);
        abc.a.push_back(c.a);
        abc.b.push_back(c.b);
        abc.c.push_back(c.c);
    }
    auto series = reconstruct_series(sign, abc);
    return {sign, std::move(series), std::move(abc.a), std::move(abc.b), std::move(abc.c)};
}

VMatrix Hierarchy::v_matrix(DerivIndex d)
{
    check_index(d);
    coefficients(d.alpha, d.p);
    std::lock_guard lock(mutex_);
    return compute_v(d.alpha, d.p, builder(d.alpha));
}

const Polynomial &Hierarchy::generator_image(DerivIndex d, VarKind target)
{
    check_index(d);
    const VarId base{target, 0};
    {
        std::lock_guard lock(mutex_);
        auto it = images_.find({d, base});
        if (it != images_.end()) {
            return it->second;
        }
    }
    const auto &abc = coefficients(d.alpha, d.p);
    const Polynomial self = Polynomial::variable(base);
    const bool p0 = d.p == 0;
    Polynomial img;
    if (d.alpha == Sign::Plus) {
        if (target == VarKind::R) {
            // D_{+,p} r_n = r_n Lambda(a) + Lambda(b) + delta_{p,0} r_n
            img = self * abc.a.shifted(1) + abc.b.shifted(1) + (p0 ? self : Polynomial{});
        } else {
            // D_{+,p} q_n = q_n Lambda(a) - Lambda(c)
            img = self * abc.a.shifted(1) - abc.c.shifted(1);
        }
    } else {
        if (target == VarKind::R) {
            // D_{-,p} r_n = -r_n Lambda(a) - Lambda(b)
            img = -(self * abc.a.shifted(1)) - abc.b.shifted(1);
        } else {
            // D_{-,p} q_n = -q_n Lambda(a) + Lambda(c) + delta_{p,0} q_n
            img = -(self * abc.a.shifted(1)) + abc.c.shifted(1) + (p0 ? self : Polynomial{});
        }
    }
    std::lock_guard lock(mutex_);
    return images_.emplace(std::pair{d, base}, std::move(img)).first->second;
}

Polynomial Hierarchy::image(DerivIndex d, VarId v)
{
    {
        std::lock_guard lock(mutex_);
        auto it = images_.find({d, v});
        if (it != images_.end()) {
            return it->second;
        }
    }
    Polynomial img = generator_image(d, v.kind).shifted(v.offset);
    std::lock_guard lock(mutex_);
    return images_.emplace(std::pair{d, v}, std::move(img)).first->second;
}

Polynomial Hierarchy::apply(DerivIndex d, const Polynomial &f)
{
    std::vector<Polynomial::Term> out;
    for (const auto &[m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto factor = m.factor(i);
            const Rational scale = c * factor.exponent;
            const Monomial rest = m.lowered(i);
            const Polynomial img = image(d, factor.var);
            for (const auto &[mi, ci] : img.terms()) {
                out.emplace_back(rest * mi, scale * ci);
            }
        }
    }
    return Polynomial::from_terms(std::move(out));
}

Polynomial Hierarchy::apply_all(const std::vector<DerivIndex> &ds, Polynomial f)
{
    for (const auto &d : ds) {
        f = apply(d, f);
    }
    return f;
}

Polynomial Hierarchy::commutator(DerivIndex d1, DerivIndex d2, const Polynomial &f)
{
    return apply(d1, apply(d2, f)) - apply(d2, apply(d1, f));
}

Polynomial Hierarchy::t_flow(const Polynomial &f)
{
    return apply({Sign::Plus, 1}, f) - apply({Sign::Minus, 1}, f) - apply({Sign::Plus, 0}, f) + apply({Sign::Minus, 0}, f);
}

IdentityCheck Hierarchy::check_equivariance(DerivIndex d, Sign sign, int order)
{
    const auto v = v_matrix(d).laurent();
    const auto dir = series_direction(sign);
    std::map<int, PolyMatrix> r;
    for (int p = 0; p <= order; ++p) {
        r[dir == SeriesDirection::AscendingLambda ? p : -p] = resolvent_coefficient(sign, p);
    }
    const int vmin = v.coefficients().begin()->first;
    const int vmax = v.coefficients().rbegin()->first;
    // R_- is known on exponents [0, N], R_+ on [-N, 0]; the commutator coefficient at
    // e draws on R at e - e1 for every e1 in the support of V.
    const int lo = dir == SeriesDirection::AscendingLambda ? vmin : vmax - order;
    const int hi = dir == SeriesDirection::AscendingLambda ? vmin + order : vmax;
    for (int e = lo; e <= hi; ++e) {
        PolyMatrix rhs;
        for (const auto &[e1, ve] : v.coefficients()) {
            auto it = r.find(e - e1);
            if (it != r.end()) {
                rhs += altau::commutator(ve, it->second);
            }
        }
        PolyMatrix lhs;
        if (auto it = r.find(e); it != r.end()) {
            lhs = it->second.map([&](const Polynomial &x) { return apply(d, x); });
        }
        auto check = compare(lhs, rhs, "lambda^" + std::to_string(e));
        if (!check.holds) {
            return check;
        }
    }
    return {};
}

IdentityCheck Hierarchy::check_zero_curvature(DerivIndex d)
{
    const auto v = v_matrix(d).laurent();
    const auto u = lax_u();
    const auto rhs = v.map([](const Polynomial &x) { return x.shifted(1); }) * u - u * v;
    PolyLaurentMatrix lhs;
    lhs.add(0, PolyMatrix{0, generator_image(d, VarKind::R), 0, 0});
    lhs.add(1, PolyMatrix{0, 0, generator_image(d, VarKind::Q), 0});
    std::map<int, bool> exps;
    for (const auto &[e, m] : lhs.coefficients()) {
        exps[e] = true;
    }
    for (const auto &[e, m] : rhs.coefficients()) {
        exps[e] = true;
    }
    for (const auto &[e, unused] : exps) {
        auto check = compare(lhs.at(e), rhs.at(e), "lambda^" + std::to_string(e));
        if (!check.holds) {
            return check;
        }
    }
    return {};
}

Polynomial apply_derivation(Hierarchy &h, DerivIndex d, const Polynomial &f, int order)
{
    if (d.p > order) {
        throw std::invalid_argument("derivation " + to_string(d) + " needs resolvent order " + std::to_string(d.p));
    }
    return h.apply(d, f);
}

Polynomial commutator(Hierarchy &h, DerivIndex d1, DerivIndex d2, const Polynomial &f, int order)
{
    if (d1.p + d2.p + 1 > order) {
        throw std::invalid_argument("commutator of " + to_string(d1) + " and " + to_string(d2) + " needs resolvent order " +
                                    std::to_string(d1.p + d2.p + 1));
    }
    return h.commutator(d1, d2, f);
}

Polynomial t_flow(Hierarchy &h, const Polynomial &f, int order)
{
    if (order < 1) {
        throw std::invalid_argument("t-flow needs resolvent order 1");
    }
    return h.t_flow(f);
}

IdentityCheck check_equivariance(Hierarchy &h, DerivIndex d, Sign sign, int order)
{
    if (order < 0) {
        throw std::invalid_argument("resolvent order must be non-negative");
    }
    return h.check_equivariance(d, sign, order);
}

} // namespace altau
