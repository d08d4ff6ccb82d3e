#include <doctest.h>

#include <stdexcept>

#include <altau/rational.hpp>

using altau::Rational;

TEST_SUITE("rational")
{
    TEST_CASE("parse and canonical form")
    {
        CHECK(altau::parse_rational("6/4") == Rational(3, 2));
        CHECK(altau::parse_rational("-6/4") == Rational(-3, 2));
        CHECK(altau::parse_rational("+7") == Rational(7));
        CHECK(altau::parse_rational("0/5") == Rational(0));
        const Rational big = altau::parse_rational("123456789012345678901234567890/3");
        CHECK(big.get_den() == 1);
    }

    TEST_CASE("malformed input is rejected")
    {
        for (const char *bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", "1//2", "--1", " 1"}) {
            CAPTURE(bad);
            CHECK_THROWS_AS(altau::parse_rational(bad), std::invalid_argument);
        }
    }

    TEST_CASE("formatting")
    {
        CHECK(altau::to_fraction_string(Rational(-3)) == "-3/1");
        CHECK(altau::to_fraction_string(altau::fraction(2, -4)) == "-1/2");
        CHECK(altau::to_display_string(altau::fraction(4, 2)) == "2");
        CHECK(altau::to_display_string(altau::fraction(-5, 15)) == "-1/3");
        CHECK_THROWS_AS(altau::fraction(1, 0), std::domain_error);
    }

    TEST_CASE("integer powers")
    {
        CHECK(altau::power(Rational(2, 3), 3) == Rational(8, 27));
        CHECK(altau::power(Rational(2, 3), -2) == Rational(9, 4));
        CHECK(altau::power(Rational(-1, 2), 0) == Rational(1));
        CHECK(altau::power(Rational(0), 0) == Rational(1));
        CHECK_THROWS_AS(altau::power(Rational(0), -1), std::domain_error);
    }

    TEST_CASE("format then parse is the identity")
    {
        for (int n = -20; n <= 20; ++n) {
            for (int d = 1; d <= 7; ++d) {
                Rational x(n, d);
                x.canonicalize();
                CHECK(altau::parse_rational(altau::to_fraction_string(x)) == x);
                CHECK(altau::parse_rational(altau::to_display_string(x)) == x);
            }
        }
    }
}
