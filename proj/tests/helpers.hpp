#ifndef ALTAU_TEST_HELPERS_HPP
#define ALTAU_TEST_HELPERS_HPP

#include <random>
#include <string>

#include <altau/encoding.hpp>
#include <altau/polynomial.hpp>

namespace testing
{

inline altau::Polynomial P(const std::string &text) { return altau::parse_polynomial(text); }

// Random polynomial with small coefficients, offsets in [-span, span], at most `terms` terms.
inline altau::Polynomial random_polynomial(std::mt19937_64 &rng, int terms, int span, int max_degree)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> offset(-span, span);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> count(0, terms);
    altau::Polynomial f;
    const int n = count(rng);
    for (int t = 0; t < n; ++t) {
        altau::Polynomial m(altau::fraction(coeff(rng), den(rng)));
        const int d = degree(rng);
        for (int i = 0; i < d; ++i) {
            m *= altau::Polynomial::variable({kind(rng) == 0 ? altau::VarKind::Q : altau::VarKind::R, offset(rng)});
        }
        f += m;
    }
    return f;
}

// Exchanges q and r at every offset.
inline altau::Polynomial swap_qr(const altau::Polynomial &f)
{
    altau::Polynomial out;
    for (const auto &[m, c] : f.terms()) {
        altau::Polynomial t(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto fac = m.factor(i);
            altau::VarId v = fac.var;
            v.kind = v.kind == altau::VarKind::Q ? altau::VarKind::R : altau::VarKind::Q;
            t *= altau::Polynomial::monomial(altau::Monomial(v, fac.exponent));
        }
        out += t;
    }
    return out;
}

} // namespace testing

#endif
