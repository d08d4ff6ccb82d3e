#ifndef ALTAU_ENCODING_HPP
#define ALTAU_ENCODING_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include <altau/index.hpp>
#include <altau/polynomial.hpp>
#include <altau/report.hpp>
#include <altau/resolvent.hpp>
#include <altau/tau_structure.hpp>

namespace altau
{

using Json = nlohmann::json;

// All decoders throw std::invalid_argument on malformed input.

// "num/den" strings.
Json rational_to_json(const Rational &x);
Rational rational_from_json(const Json &j);

// {"terms":[{"coeff":"num/den","vars":[["q"|"r", offset, exponent], ...]}, ...]}
Json polynomial_to_json(const Polynomial &f);
Polynomial polynomial_from_json(const Json &j);

// Inverse of Polynomial::to_string, plus parentheses, integer powers and division by
// rational constants: "(1 - q[n-1]*r[n-1])^2 - 1/2*r[n+2]".
Polynomial parse_polynomial(std::string_view text);

// {"sign":"+","order":N,"a":[...],"b":[...],"c":[...]}
Json resolvent_to_json(const ResolventBundle &bundle);
ResolventBundle resolvent_from_json(const Json &j);

struct FlowRecord {
    DerivIndex d;
    VarKind target = VarKind::Q;
    Polynomial image;

    friend bool operator==(const FlowRecord &, const FlowRecord &) = default;
};

// {"alpha":"+","p":1,"target":"q","image":{...}}
Json flow_to_json(const FlowRecord &flow);
FlowRecord flow_from_json(const Json &j);

// {"pattern":"++-","max":[3,3,3],"entries":{"1,2,3":{...}, ...}}
Json omega_table_to_json(const OmegaTable &table);
OmegaTable omega_table_from_json(const Json &j);

// {"passed":true,"lines":[{"name":...,"passed":...,"detail":...}, ...]}
Json report_to_json(const CheckReport &report);
CheckReport report_from_json(const Json &j);

std::string index_key(const std::vector<int> &indices);
std::vector<int> parse_index_key(std::string_view key);

} // namespace altau

#endif
