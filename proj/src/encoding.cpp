#include <altau/encoding.hpp>

#include <cctype>
#include <stdexcept>

namespace altau
{

namespace
{

[[noreturn]] void malformed(const std::string &what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json &field(const Json &j, const char *name)
{
    if (!j.is_object() || !j.contains(name)) {
        malformed(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

int int_field(const Json &j, const char *name)
{
    const Json &v = field(j, name);
    if (!v.is_number_integer()) {
        malformed(std::string("field \"") + name + "\" must be an integer");
    }
    return v.get<int>();
}

std::string string_field(const Json &j, const char *name)
{
    const Json &v = field(j, name);
    if (!v.is_string()) {
        malformed(std::string("field \"") + name + "\" must be a string");
    }
    return v.get<std::string>();
}

Sign sign_from_string(const std::string &s)
{
    if (s.size() != 1) {
        malformed("sign must be \"+\" or \"-\"");
    }
    return parse_sign(s[0]);
}

Json polynomial_list(const std::vector<Polynomial> &v)
{
    Json out = Json::array();
    for (const auto &f : v) {
        out.push_back(polynomial_to_json(f));
    }
    return out;
}

std::vector<Polynomial> polynomial_list_from_json(const Json &j, const char *name)
{
    const Json &v = field(j, name);
    if (!v.is_array()) {
        malformed(std::string("field \"") + name + "\" must be an array");
    }
    std::vector<Polynomial> out;
    for (const auto &e : v) {
        out.push_back(polynomial_from_json(e));
    }
    return out;
}

// Recursive descent over
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' unary) | ('/' number))*
//   unary  := '-' unary | '+' unary | power
//   power  := atom ('^' integer)?
//   atom   := number | ('q' | 'r') '[' 'n' (('+' | '-') integer)? ']' | '(' expr ')'
class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse()
    {
        Polynomial f = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return f;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw std::invalid_argument("cannot parse polynomial at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool at_digit()
    {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    mpz_class integer()
    {
        if (!at_digit()) {
            fail("expected a digit");
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    int small_integer()
    {
        const mpz_class v = integer();
        if (!v.fits_sint_p()) {
            fail("integer out of range");
        }
        return static_cast<int>(v.get_si());
    }

    Polynomial expr()
    {
        Polynomial f = term();
        for (;;) {
            if (accept('+')) {
                f += term();
            } else if (accept('-')) {
                f -= term();
            } else {
                return f;
            }
        }
    }

    Polynomial term()
    {
        Polynomial f = unary();
        for (;;) {
            if (accept('*')) {
                f *= unary();
            } else if (accept('/')) {
                const mpz_class d = integer();
                if (d == 0) {
                    fail("division by zero");
                }
                f *= Rational(mpz_class(1), d);
            } else {
                return f;
            }
        }
    }

    Polynomial unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    Polynomial power()
    {
        Polynomial base = atom();
        if (!accept('^')) {
            return base;
        }
        const int e = small_integer();
        if (e > static_cast<int>(Monomial::max_exponent)) {
            fail("exponent too large");
        }
        Polynomial out(1);
        for (int i = 0; i < e; ++i) {
            out *= base;
        }
        return out;
    }

    Polynomial atom()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial f = expr();
            expect(')');
            return f;
        }
        if (c == 'q' || c == 'r') {
            ++pos_;
            expect('[');
            expect('n');
            int offset = 0;
            if (accept('+')) {
                offset = small_integer();
            } else if (accept('-')) {
                offset = -small_integer();
            }
            expect(']');
            if (offset > Monomial::max_offset || offset < -Monomial::max_offset) {
                fail("offset out of range");
            }
            return Polynomial::variable({c == 'q' ? VarKind::Q : VarKind::R, offset});
        }
        if (at_digit()) {
            return Polynomial(Rational(integer()));
        }
        fail("expected a number, a variable or '('");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Json rational_to_json(const Rational &x) { return to_fraction_string(x); }

Rational rational_from_json(const Json &j)
{
    if (!j.is_string()) {
        malformed("rational must be a \"num/den\" string");
    }
    return parse_rational(j.get<std::string>());
}

Json polynomial_to_json(const Polynomial &f)
{
    Json terms = Json::array();
    for (const auto &[m, c] : f.terms()) {
        Json vars = Json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto factor = m.factor(i);
            vars.push_back({factor.var.kind == VarKind::Q ? "q" : "r", factor.var.offset, factor.exponent});
        }
        terms.push_back({{"coeff", rational_to_json(c)}, {"vars", vars}});
    }
    return {{"terms", terms}};
}

Polynomial polynomial_from_json(const Json &j)
{
    const Json &terms = field(j, "terms");
    if (!terms.is_array()) {
        malformed("\"terms\" must be an array");
    }
    std::vector<Polynomial::Term> out;
    for (const auto &t : terms) {
        const Rational c = rational_from_json(field(t, "coeff"));
        const Json &vars = field(t, "vars");
        if (!vars.is_array()) {
            malformed("\"vars\" must be an array");
        }
        Monomial m;
        for (const auto &v : vars) {
            if (!v.is_array() || v.size() != 3 || !v[0].is_string() || !v[1].is_number_integer() ||
                !v[2].is_number_integer()) {
                malformed("a variable must be [\"q\"|\"r\", offset, exponent]");
            }
            const auto kind = v[0].get<std::string>();
            if (kind != "q" && kind != "r") {
                malformed("variable kind must be \"q\" or \"r\"");
            }
            const auto offset = v[1].get<long long>();
            const auto exponent = v[2].get<long long>();
            if (offset > Monomial::max_offset || offset < -Monomial::max_offset) {
                malformed("variable offset out of range");
            }
            if (exponent < 1 || exponent > Monomial::max_exponent) {
                malformed("variable exponent must lie in 1..255");
            }
            m = m * Monomial({kind == "q" ? VarKind::Q : VarKind::R, static_cast<int>(offset)},
                             static_cast<unsigned>(exponent));
        }
        out.emplace_back(std::move(m), c);
    }
    return Polynomial::from_terms(std::move(out));
}

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

Json resolvent_to_json(const ResolventBundle &bundle)
{
    return {{"sign", std::string(1, sign_char(bundle.sign))},
            {"order", bundle.order()},
            {"a", polynomial_list(bundle.a)},
            {"b", polynomial_list(bundle.b)},
            {"c", polynomial_list(bundle.c)}};
}

ResolventBundle resolvent_from_json(const Json &j)
{
    const Sign sign = sign_from_string(string_field(j, "sign"));
    const int order = int_field(j, "order");
    ResolventAbc abc{polynomial_list_from_json(j, "a"), polynomial_list_from_json(j, "b"),
                     polynomial_list_from_json(j, "c")};
    const auto expected = static_cast<std::size_t>(order) + 1;
    if (order < 0 || abc.a.size() != expected || abc.b.size() != expected || abc.c.size() != expected) {
        malformed("resolvent families must hold order + 1 entries");
    }
    MatrixSeries series = reconstruct_series(sign, abc);
    return {sign, std::move(series), std::move(abc.a), std::move(abc.b), std::move(abc.c)};
}

Json flow_to_json(const FlowRecord &flow)
{
    return {{"alpha", std::string(1, sign_char(flow.d.alpha))},
            {"p", flow.d.p},
            {"target", flow.target == VarKind::Q ? "q" : "r"},
            {"image", polynomial_to_json(flow.image)}};
}

FlowRecord flow_from_json(const Json &j)
{
    FlowRecord out;
    out.d.alpha = sign_from_string(string_field(j, "alpha"));
    out.d.p = int_field(j, "p");
    if (out.d.p < 0) {
        malformed("p must be non-negative");
    }
    const auto target = string_field(j, "target");
    if (target != "q" && target != "r") {
        malformed("target must be \"q\" or \"r\"");
    }
    out.target = target == "q" ? VarKind::Q : VarKind::R;
    out.image = polynomial_from_json(field(j, "image"));
    return out;
}

std::string index_key(const std::vector<int> &indices)
{
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(indices[i]);
    }
    return out;
}

std::vector<int> parse_index_key(std::string_view key)
{
    std::vector<int> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t end = key.find(',', start);
        const auto part = key.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (part.empty() || part.size() > 9) {
            malformed("bad index key \"" + std::string(key) + "\"");
        }
        int v = 0;
        for (char c : part) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                malformed("bad index key \"" + std::string(key) + "\"");
            }
            v = v * 10 + (c - '0');
        }
        out.push_back(v);
        if (end == std::string_view::npos) {
            return out;
        }
        start = end + 1;
    }
}

Json omega_table_to_json(const OmegaTable &table)
{
    Json entries = Json::object();
    for (const auto &[idx, f] : table.entries) {
        entries[index_key(idx)] = polynomial_to_json(f);
    }
    return {{"pattern", to_string(table.signs)}, {"max", table.max_index}, {"entries", entries}};
}

OmegaTable omega_table_from_json(const Json &j)
{
    OmegaTable out;
    out.signs = parse_sign_pattern(string_field(j, "pattern"));
    const Json &max = field(j, "max");
    if (!max.is_array() || max.size() != out.signs.size()) {
        malformed("\"max\" must hold one bound per sign");
    }
    for (const auto &m : max) {
        if (!m.is_number_integer()) {
            malformed("\"max\" entries must be integers");
        }
        out.max_index.push_back(m.get<int>());
    }
    const Json &entries = field(j, "entries");
    if (!entries.is_object()) {
        malformed("\"entries\" must be an object");
    }
    for (const auto &[key, value] : entries.items()) {
        auto idx = parse_index_key(key);
        if (idx.size() != out.signs.size()) {
            malformed("index key \"" + key + "\" does not match the pattern length");
        }
        out.entries.emplace(std::move(idx), polynomial_from_json(value));
    }
    return out;
}

Json report_to_json(const CheckReport &report)
{
    Json lines = Json::array();
    for (const auto &l : report.lines) {
        lines.push_back({{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
    }
    return {{"passed", report.passed()}, {"lines", lines}};
}

CheckReport report_from_json(const Json &j)
{
    const Json &lines = field(j, "lines");
    if (!lines.is_array()) {
        malformed("\"lines\" must be an array");
    }
    CheckReport out;
    for (const auto &l : lines) {
        const Json &passed = field(l, "passed");
        if (!passed.is_boolean()) {
            malformed("\"passed\" must be a boolean");
        }
        out.add(string_field(l, "name"), passed.get<bool>(), string_field(l, "detail"));
    }
    return out;
}

} // namespace altau
