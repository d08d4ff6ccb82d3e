#include <doctest.h>

#include <stdexcept>

#include <random>

#include <altau/hierarchy.hpp>

#include "helpers.hpp"

using namespace altau;
using testing::P;

namespace
{

const Polynomial qn = Polynomial::variable(q_var(0));
const Polynomial rn = Polynomial::variable(r_var(0));

} // namespace

TEST_SUITE("hierarchy")
{
    TEST_CASE("first flows")
    {
        Hierarchy h;
        CHECK(h.apply({Sign::Minus, 0}, rn) == P("-r[n]"));
        CHECK(h.apply({Sign::Minus, 0}, qn) == P("q[n]"));
        CHECK(h.apply({Sign::Plus, 0}, rn) == P("r[n]"));
        CHECK(h.apply({Sign::Plus, 0}, qn) == P("-q[n]"));
        CHECK(h.apply({Sign::Minus, 1}, rn) == P("-r[n-1] + r[n]*q[n]*r[n-1]"));
        CHECK(h.apply({Sign::Minus, 1}, qn) == P("q[n+1] - r[n]*q[n]*q[n+1]"));
        CHECK(h.apply({Sign::Plus, 1}, rn) == P("r[n+1] - r[n]*q[n]*r[n+1]"));
        CHECK(h.apply({Sign::Plus, 1}, qn) == P("-q[n-1] + r[n]*q[n]*q[n-1]"));
    }

    TEST_CASE("complexified AL equation")
    {
        Hierarchy h;
        CHECK(h.t_flow(rn) == P("r[n+1] - 2*r[n] + r[n-1] - r[n]*q[n]*(r[n+1] + r[n-1])"));
        CHECK(h.t_flow(qn) == P("-q[n+1] + 2*q[n] - q[n-1] + r[n]*q[n]*(q[n+1] + q[n-1])"));
    }

    TEST_CASE("exchanging q and r exchanges the signs of the flows")
    {
        Hierarchy h;
        for (int p = 0; p <= 4; ++p) {
            CHECK(testing::swap_qr(h.apply({Sign::Minus, p}, qn)) == h.apply({Sign::Plus, p}, rn));
            CHECK(testing::swap_qr(h.apply({Sign::Minus, p}, rn)) == h.apply({Sign::Plus, p}, qn));
        }
    }

    TEST_CASE("constants are annihilated")
    {
        Hierarchy h;
        CHECK(h.apply({Sign::Plus, 2}, Polynomial(Rational(7, 3))).is_zero());
        CHECK(h.t_flow(Polynomial()).is_zero());
    }

    TEST_CASE("Leibniz rule on random polynomials")
    {
        Hierarchy h;
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = testing::random_polynomial(rng, 3, 2, 2);
            const auto g = testing::random_polynomial(rng, 3, 2, 2);
            const DerivIndex d{trial % 2 == 0 ? Sign::Plus : Sign::Minus, trial % 3};
            CHECK(h.apply(d, f * g) == h.apply(d, f) * g + f * h.apply(d, g));
            CHECK(h.apply(d, f + g) == h.apply(d, f) + h.apply(d, g));
        }
    }

    TEST_CASE("derivations commute with the shift")
    {
        Hierarchy h;
        std::mt19937_64 rng(32);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = testing::random_polynomial(rng, 3, 2, 3);
            const DerivIndex d{trial % 2 == 0 ? Sign::Minus : Sign::Plus, 1 + trial % 2};
            const int k = trial % 5 - 2;
            CHECK(h.apply(d, f.shifted(k)) == h.apply(d, f).shifted(k));
        }
    }

    TEST_CASE("flows commute")
    {
        Hierarchy h;
        std::mt19937_64 rng(33);
        const auto f = testing::random_polynomial(rng, 4, 1, 2);
        CHECK(h.commutator({Sign::Plus, 2}, {Sign::Minus, 1}, f).is_zero());
        CHECK(h.commutator({Sign::Plus, 1}, {Sign::Plus, 2}, qn * rn).is_zero());
        CHECK(h.apply_all({{Sign::Plus, 1}, {Sign::Minus, 1}}, qn) ==
              h.apply({Sign::Plus, 1}, h.apply({Sign::Minus, 1}, qn)));
    }

    TEST_CASE("zero curvature and equivariance")
    {
        Hierarchy h;
        for (Sign s : {Sign::Minus, Sign::Plus}) {
            for (int p = 0; p <= 2; ++p) {
                CHECK(h.check_zero_curvature({s, p}).holds);
                CHECK(h.check_equivariance({s, p}, Sign::Minus, 4).holds);
                CHECK(h.check_equivariance({s, p}, Sign::Plus, 4).holds);
            }
        }
    }

    TEST_CASE("resolvent access through the hierarchy")
    {
        Hierarchy h;
        CHECK(h.coefficients(Sign::Minus, 1).c == qn);
        CHECK(h.resolvent_coefficient(Sign::Plus, 0) == PolyMatrix{Polynomial(1), Polynomial(0), P("q[n-1]"), Polynomial(0)});
        CHECK(h.resolvent(Sign::Minus, 3).order() == 3);
        CHECK(h.image({Sign::Plus, 1}, r_var(2)) == h.apply({Sign::Plus, 1}, rn).shifted(2));
    }

    TEST_CASE("order checks")
    {
        Hierarchy h;
        CHECK_THROWS_AS(apply_derivation(h, {Sign::Plus, 3}, qn, 2), std::invalid_argument);
        CHECK(apply_derivation(h, {Sign::Plus, 2}, qn, 2) == h.apply({Sign::Plus, 2}, qn));
        CHECK_THROWS_AS(commutator(h, {Sign::Plus, 1}, {Sign::Minus, 4}, qn, 3), std::invalid_argument);
        CHECK_THROWS_AS(t_flow(h, qn, 0), std::invalid_argument);
        CHECK(t_flow(h, qn, 1) == h.t_flow(qn));
        CHECK_THROWS_AS(h.apply({Sign::Plus, -1}, qn), std::invalid_argument);
        CHECK_THROWS_AS(check_equivariance(h, {Sign::Plus, 1}, Sign::Minus, -1), std::invalid_argument);
    }
}
