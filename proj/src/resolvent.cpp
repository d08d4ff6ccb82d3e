#include <altau/resolvent.hpp>

#include <stdexcept>
#include <string>

namespace altau
{

namespace
{

const Polynomial &qn()
{
    static const Polynomial v = Polynomial::variable(q_var(0));
    return v;
}

const Polynomial &rn()
{
    static const Polynomial v = Polynomial::variable(r_var(0));
    return v;
}

// (Lambda + 1) f
Polynomial shift_plus_one(const Polynomial &f) { return f.shifted(1) + f; }

void require_zero(const Polynomial &residual, const char *equation, Sign sign, int p)
{
    if (!residual.is_zero()) {
        throw std::logic_error(std::string("resolvent recursion inconsistent: ") + equation + " at order " +
                               std::to_string(p) + " for sign " + sign_char(sign) + ", residual " +
                               residual.to_string());
    }
}

template <typename Coeffs>
VMatrix build_v(Sign sign, int p, int available, const Coeffs &coefficient)
{
    if (p < 0 || p > available) {
        throw std::out_of_range("V_{" + std::string(1, sign_char(sign)) + "," + std::to_string(p) +
                                "} needs resolvent order " + std::to_string(p));
    }
    // Minus: (lambda^-p R_-)_{<=0} - [[a_p, b_p], [0, 0]], coefficient k <-> lambda^{-k}
    // Plus:  (lambda^p R_+)_{>=0} - [[0, 0], [c_p, -a_p]], coefficient k <-> lambda^{k}
    std::vector<PolyMatrix> coeffs(static_cast<std::size_t>(p) + 1);
    for (int k = 0; k <= p; ++k) {
        coeffs[static_cast<std::size_t>(k)] = resolvent_matrix(sign, p - k, coefficient(p - k));
    }
    const auto &top = coefficient(p);
    if (sign == Sign::Minus) {
        coeffs[0].e11 -= top.a;
        coeffs[0].e12 -= top.b;
    } else {
        coeffs[0].e21 -= top.c;
        coeffs[0].e22 += top.a;
    }
    const auto dir = sign == Sign::Minus ? SeriesDirection::AscendingLambdaInverse : SeriesDirection::AscendingLambda;
    return {sign, p, MatrixSeries(dir, std::move(coeffs))};
}

} // namespace

PolyMatrix resolvent_constant_matrix(Sign sign)
{
    return sign == Sign::Minus ? PolyMatrix{0, 0, 0, 1} : PolyMatrix{1, 0, 0, 0};
}

SeriesDirection series_direction(Sign sign)
{
    return sign == Sign::Minus ? SeriesDirection::AscendingLambda : SeriesDirection::AscendingLambdaInverse;
}

PolyMatrix resolvent_matrix(Sign sign, int p, const ResolventCoefficients &abc)
{
    PolyMatrix m{abc.a, abc.b, abc.c, -abc.a};
    if (p == 0) {
        m += resolvent_constant_matrix(sign);
    }
    return m;
}

PolyLaurentMatrix lax_u()
{
    PolyLaurentMatrix u;
    u.add(0, PolyMatrix{0, rn(), 0, 1});
    u.add(1, PolyMatrix{1, 0, qn(), 0});
    return u;
}

ResolventBuilder::ResolventBuilder(Sign sign) : sign_(sign)
{
    if (sign == Sign::Minus) {
        coeffs_.push_back({0, rn().shifted(-1), 0});
    } else {
        coeffs_.push_back({0, 0, qn().shifted(-1)});
    }
}

void ResolventBuilder::extend_to(int order)
{
    while (this->order() < order) {
        step();
    }
}

void ResolventBuilder::step()
{
    const int p = order() + 1;
    const auto &prev = coeffs_.back();
    ResolventCoefficients next;
    if (sign_ == Sign::Minus) {
        // (a13) at lambda^{p-1}: c_p = Lambda c_{p-1} - q_n (Lambda+1) a_{p-1} + q_n delta_{p,1}
        next.c = prev.c.shifted(1) - qn() * shift_plus_one(prev.a);
        if (p == 1) {
            next.c += qn();
        }
        // a - a^2 - bc = 0 at lambda^p, linear in a_p because a_0 = 0
        for (int j = 1; j < p; ++j) {
            next.a += at(j).a * at(p - j).a;
        }
        next.a += coeffs_[0].b * next.c;
        for (int j = 1; j < p; ++j) {
            next.a += at(j).b * at(p - j).c;
        }
        // (a12) at lambda^p: Lambda b_p = b_{p-1} - r_n (Lambda+1) a_p
        next.b = (prev.b - rn() * shift_plus_one(next.a)).shifted(-1);

        // (a11) at lambda^{p-1} and (a14) at lambda^p
        require_zero(prev.a.shifted(1) - prev.a + qn() * prev.b.shifted(1) - rn() * next.c, "(Lambda-1)a + q Lambda b - r c/lambda",
                     sign_, p - 1);
        require_zero(next.a.shifted(1) - next.a - rn() * next.c.shifted(1) + qn() * prev.b, "(Lambda-1)a - r Lambda c + lambda q b",
                     sign_, p);
    } else {
        // lambda^{1-p} component of r(Lambda+1)a + (Lambda-lambda)b = -r:
        // b_p = Lambda b_{p-1} + r_n (Lambda+1) a_{p-1} + r_n delta_{p,1}
        next.b = prev.b.shifted(1) + rn() * shift_plus_one(prev.a);
        if (p == 1) {
            next.b += rn();
        }
        // a + a^2 + bc = 0 at lambda^-p, b_0 = 0
        for (int j = 1; j < p; ++j) {
            next.a -= at(j).a * at(p - j).a;
        }
        next.a -= next.b * coeffs_[0].c;
        for (int j = 1; j < p; ++j) {
            next.a -= at(j).b * at(p - j).c;
        }
        // q(Lambda+1)a - (Lambda - 1/lambda)c = -q at lambda^-p: Lambda c_p = q_n (Lambda+1) a_p + c_{p-1}
        next.c = (qn() * shift_plus_one(next.a) + prev.c).shifted(-1);

        require_zero(next.a.shifted(1) - next.a + qn() * next.b.shifted(1) - rn() * prev.c, "(Lambda-1)a + q Lambda b - r c/lambda", sign_,
                     p);
        require_zero(prev.a.shifted(1) - prev.a - rn() * prev.c.shifted(1) + qn() * next.b, "(Lambda-1)a - r Lambda c + lambda q b",
                     sign_, p - 1);
    }
    coeffs_.push_back(std::move(next));
}

ResolventBundle compute_resolvent(Sign sign, int order)
{
    if (order < 0) {
        throw std::invalid_argument("resolvent order must be non-negative");
    }
    ResolventBuilder builder(sign);
    builder.extend_to(order);
    ResolventAbc abc;
    for (int p = 0; p <= order; ++p) {
        abc.a.push_back(builder.at(p).a);
        abc.b.push_back(builder.at(p).b);
        abc.c.push_back(builder.at(p).c);
    }
    auto series = reconstruct_series(sign, abc);
    return {sign, std::move(series), std::move(abc.a), std::move(abc.b), std::move(abc.c)};
}

ResolventAbc extract_abc(const ResolventBundle &bundle) { return {bundle.a, bundle.b, bundle.c}; }

MatrixSeries reconstruct_series(Sign sign, const ResolventAbc &abc)
{
    if (abc.a.size() != abc.b.size() || abc.a.size() != abc.c.size() || abc.a.empty()) {
        throw std::invalid_argument("a, b, c families must have equal non-zero length");
    }
    std::vector<PolyMatrix> coeffs;
    for (std::size_t p = 0; p < abc.a.size(); ++p) {
        coeffs.push_back(resolvent_matrix(sign, static_cast<int>(p), {abc.a[p], abc.b[p], abc.c[p]}));
    }
    return MatrixSeries(series_direction(sign), std::move(coeffs));
}

VMatrix compute_v(Sign sign, int p, const ResolventBundle &bundle)
{
    if (bundle.sign != sign) {
        throw std::invalid_argument("resolvent bundle has the wrong sign");
    }
    return build_v(sign, p, bundle.order(), [&](int j) {
        const auto i = static_cast<std::size_t>(j);
        return ResolventCoefficients{bundle.a[i], bundle.b[i], bundle.c[i]};
    });
}

VMatrix compute_v(Sign sign, int p, const ResolventBuilder &builder)
{
    if (builder.sign() != sign) {
        throw std::invalid_argument("resolvent builder has the wrong sign");
    }
    return build_v(sign, p, builder.order(), [&](int j) -> const ResolventCoefficients & { return builder.at(j); });
}

} // namespace altau
