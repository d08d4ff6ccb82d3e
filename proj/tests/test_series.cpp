#include <doctest.h>

#include <stdexcept>

#include <random>

#include <altau/series.hpp>

using namespace altau;

namespace
{

const std::vector<DerivIndex> two_vars{{Sign::Plus, 1}, {Sign::Minus, 1}};

TimeSeries random_series(std::mt19937_64 &rng, int degree, Rational constant)
{
    std::uniform_int_distribution<int> c(-4, 4);
    TimeSeries s(two_vars, degree, constant);
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; i + j <= degree; ++j) {
            if (i + j > 0) {
                s.add_term({i, j}, fraction(c(rng), 3));
            }
        }
    }
    return s;
}

} // namespace

TEST_SUITE("series")
{
    TEST_CASE("truncated products")
    {
        const auto x = TimeSeries::variable(two_vars, 2, 0);
        const auto y = TimeSeries::variable(two_vars, 2, 1);
        const auto p = (x + y) * (x + y) * (x + y);
        CHECK(p.terms().empty());
        const auto s = (x + y) * (x + y);
        CHECK(s.coefficient({1, 1}) == 2);
        CHECK(s.derivative_at_zero({0, 1}) == 2);
        CHECK(s.derivative_at_zero({0, 0}) == 2);
    }

    TEST_CASE("derivatives at zero carry the factorials")
    {
        TimeSeries s(two_vars, 4);
        s.add_term({3, 1}, Rational(1, 2));
        CHECK(s.derivative_at_zero({0, 0, 0, 1}) == Rational(3));
        CHECK(s.derivative_at_zero({0, 1, 0, 0}) == Rational(3));
        CHECK(s.derivative_at_zero({0, 0}) == 0);
    }

    TEST_CASE("exp of the log recovers the series up to its constant")
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            const Rational z0 = fraction(trial + 1, 2);
            const auto z = random_series(rng, 4, z0);
            const auto l = time_series_log(z);
            CHECK(l.constant_term() == 0);
            CHECK(time_series_exp(l) * z0 == z);
        }
    }

    TEST_CASE("inverse")
    {
        std::mt19937_64 rng(9);
        const auto z = random_series(rng, 5, Rational(3));
        CHECK(z * z.inverse() == TimeSeries(two_vars, 5, 1));
        CHECK_THROWS_AS(TimeSeries(two_vars, 2).inverse(), std::domain_error);
        CHECK_THROWS_AS(time_series_exp(TimeSeries(two_vars, 2, 1)), std::domain_error);
    }

    TEST_CASE("incompatible series are rejected")
    {
        TimeSeries a(two_vars, 2), b(two_vars, 3);
        CHECK_THROWS_AS(a += b, std::invalid_argument);
    }

    TEST_CASE("regime dominance")
    {
        const Regime r{{Sign::Minus, Sign::Plus, Sign::Plus}};
        CHECK(r.dominates(1, 0));
        CHECK(r.dominates(1, 2));
        CHECK_FALSE(r.dominates(2, 1));
        CHECK_FALSE(r.dominates(0, 2));
    }

    TEST_CASE("kernel expansion")
    {
        const Regime r{{Sign::Plus, Sign::Minus}};
        // 1/(l0 - l1)^2 = sum (m+1) l1^m l0^{-m-2}
        const auto k = kernel_expand(r, 0, 1, 2, {6, 6});
        CHECK(k.coefficient({-2, 0}) == 1);
        CHECK(k.coefficient({-5, 3}) == 4);
        CHECK(k.coefficient({-3, 0}) == 0);
        // Reversed order flips the sign of the odd power.
        const auto a = kernel_expand(r, 0, 1, 1, {6, 6});
        const auto b = kernel_expand(r, 1, 0, 1, {6, 6});
        CHECK(a.coefficient({-3, 2}) == 1);
        CHECK(b.coefficient({-3, 2}) == -1);
        // (1/(x-y))^2 agrees with the power-2 kernel inside the window.
        CHECK(a * a == k);
    }
}
