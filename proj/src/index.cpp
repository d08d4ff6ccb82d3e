#include <altau/index.hpp>

#include <charconv>
#include <stdexcept>

namespace altau
{

Sign parse_sign(char c)
{
    if (c == '+') {
        return Sign::Plus;
    }
    if (c == '-') {
        return Sign::Minus;
    }
    throw std::invalid_argument(std::string("expected '+' or '-', got '") + c + "'");
}

std::string to_string(DerivIndex d) { return sign_char(d.alpha) + std::to_string(d.p); }

DerivIndex parse_deriv_index(std::string_view text)
{
    if (text.size() < 2) {
        throw std::invalid_argument("malformed index '" + std::string(text) + "'");
    }
    DerivIndex d;
    d.alpha = parse_sign(text[0]);
    const auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d.p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || d.p < 0) {
        throw std::invalid_argument("malformed index '" + std::string(text) + "'");
    }
    return d;
}

CorrelatorSpec parse_correlator_spec(std::string_view text)
{
    CorrelatorSpec spec;
    while (!text.empty()) {
        const auto comma = text.find(',');
        spec.push_back(parse_deriv_index(text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
        if (text.empty()) {
            throw std::invalid_argument("trailing ',' in correlator spec");
        }
    }
    return spec;
}

std::string to_string(const CorrelatorSpec &spec)
{
    std::string out;
    for (const auto &d : spec) {
        if (!out.empty()) {
            out += ",";
        }
        out += to_string(d);
    }
    return out;
}

std::vector<Sign> parse_sign_pattern(std::string_view text)
{
    std::vector<Sign> out;
    for (char c : text) {
        out.push_back(parse_sign(c));
    }
    return out;
}

std::string to_string(const std::vector<Sign> &pattern)
{
    std::string out;
    for (auto s : pattern) {
        out += sign_char(s);
    }
    return out;
}

} // namespace altau
