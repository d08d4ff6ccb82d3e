#include <doctest.h>

#include <stdexcept>

#include <altau/index.hpp>

using namespace altau;

TEST_SUITE("index")
{
    TEST_CASE("signs")
    {
        CHECK(parse_sign('+') == Sign::Plus);
        CHECK(parse_sign('-') == Sign::Minus);
        CHECK_THROWS_AS(parse_sign('x'), std::invalid_argument);
        CHECK(sign_value(Sign::Minus) == -1);
        CHECK(opposite(Sign::Plus) == Sign::Minus);
    }

    TEST_CASE("derivation indices")
    {
        CHECK(parse_deriv_index("+3") == DerivIndex{Sign::Plus, 3});
        CHECK(parse_deriv_index("-0") == DerivIndex{Sign::Minus, 0});
        CHECK(to_string(DerivIndex{Sign::Minus, 12}) == "-12");
        for (const char *bad : {"", "+", "1", "+-1", "+1a", "*2"}) {
            CAPTURE(bad);
            CHECK_THROWS_AS(parse_deriv_index(bad), std::invalid_argument);
        }
    }

    TEST_CASE("correlator specs")
    {
        const auto spec = parse_correlator_spec("+1,-2,+0");
        REQUIRE(spec.size() == 3);
        CHECK(spec[1] == DerivIndex{Sign::Minus, 2});
        CHECK(to_string(spec) == "+1,-2,+0");
        CHECK(parse_correlator_spec("").empty());
        CHECK_THROWS_AS(parse_correlator_spec("+1,"), std::invalid_argument);
        CHECK_THROWS_AS(parse_correlator_spec("+1,,-1"), std::invalid_argument);
    }

    TEST_CASE("sign patterns")
    {
        const auto p = parse_sign_pattern("+-+");
        CHECK(p == std::vector<Sign>{Sign::Plus, Sign::Minus, Sign::Plus});
        CHECK(to_string(p) == "+-+");
        CHECK_THROWS_AS(parse_sign_pattern("+x"), std::invalid_argument);
    }
}
