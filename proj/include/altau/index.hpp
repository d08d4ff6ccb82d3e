#ifndef ALTAU_INDEX_HPP
#define ALTAU_INDEX_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace altau
{

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

// Throws std::invalid_argument unless c is '+' or '-'.
Sign parse_sign(char c);

// Index (alpha, p) of the AL derivation D_{alpha,p} and of the time s^{alpha,p}.
struct DerivIndex {
    Sign alpha = Sign::Plus;
    int p = 0;

    auto operator<=>(const DerivIndex &) const = default;
};

// "+1", "-3", ...
std::string to_string(DerivIndex d);
DerivIndex parse_deriv_index(std::string_view text);

// Ordered list of indices, k >= 2 for correlators.
using CorrelatorSpec = std::vector<DerivIndex>;

// "+1,-1,+2"
CorrelatorSpec parse_correlator_spec(std::string_view text);
std::string to_string(const CorrelatorSpec &spec);

// "++-" -> {Plus, Plus, Minus}
std::vector<Sign> parse_sign_pattern(std::string_view text);
std::string to_string(const std::vector<Sign> &pattern);

} // namespace altau

#endif
