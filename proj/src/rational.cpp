#include <altau/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace altau
{

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
    mpz_class d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_fraction_string(const Rational &x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_display_string(const Rational &x)
{
    return x.get_den() == 1 ? x.get_num().get_str() : to_fraction_string(x);
}

Rational fraction(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r(num, 1);
    r /= Rational(den);
    return r;
}

Rational power(const Rational &x, int e)
{
    if (e < 0) {
        if (is_zero(x)) {
            throw std::domain_error("zero raised to a negative power");
        }
        return power(Rational(1) / x, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

} // namespace altau
