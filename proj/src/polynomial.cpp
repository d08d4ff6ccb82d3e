#include <altau/polynomial.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace altau
{

namespace
{

// word layout: bit 31 kind | bits 8..30 offset + bias | bits 0..7 exponent
constexpr std::uint32_t offset_bias = 1u << 22;

std::uint32_t pack(VarId v, unsigned exponent)
{
    if (v.offset > Monomial::max_offset || v.offset < -Monomial::max_offset) {
        throw std::out_of_range("variable offset out of range");
    }
    if (exponent == 0 || exponent > Monomial::max_exponent) {
        throw std::out_of_range("monomial exponent out of range");
    }
    const auto kind = static_cast<std::uint32_t>(v.kind == VarKind::R);
    return (kind << 31) | ((static_cast<std::uint32_t>(v.offset + static_cast<int>(offset_bias))) << 8) | exponent;
}

std::uint32_t var_bits(std::uint32_t w) { return w & ~0xffu; }
unsigned exp_bits(std::uint32_t w) { return w & 0xffu; }

VarId unpack_var(std::uint32_t w)
{
    const VarKind kind = (w >> 31) ? VarKind::R : VarKind::Q;
    const int offset = static_cast<int>((w >> 8) & ((1u << 23) - 1)) - static_cast<int>(offset_bias);
    return {kind, offset};
}

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Polynomial::Term> drain(Accumulator &acc)
{
    std::vector<Polynomial::Term> out;
    out.reserve(acc.size());
    for (auto &[m, c] : acc) {
        if (!is_zero(c)) {
            out.emplace_back(m, std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    return out;
}

} // namespace

Monomial::Monomial(VarId v, unsigned exponent) : words_{pack(v, exponent)} {}

Monomial::Monomial(std::initializer_list<Factor> factors)
{
    Monomial acc;
    for (const auto &f : factors) {
        acc = acc * Monomial(f.var, f.exponent);
    }
    *this = std::move(acc);
}

Monomial::Factor Monomial::factor(std::size_t i) const
{
    return {unpack_var(words_[i]), exp_bits(words_[i])};
}

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (auto w : words_) {
        d += exp_bits(w);
    }
    return d;
}

unsigned Monomial::exponent_of(VarId v) const
{
    const auto key = var_bits(pack(v, 1));
    for (auto w : words_) {
        if (var_bits(w) == key) {
            return exp_bits(w);
        }
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial &other) const
{
    Monomial out;
    out.words_.reserve(words_.size() + other.words_.size());
    std::size_t i = 0, j = 0;
    while (i < words_.size() && j < other.words_.size()) {
        const auto a = var_bits(words_[i]);
        const auto b = var_bits(other.words_[j]);
        if (a < b) {
            out.words_.push_back(words_[i++]);
        } else if (b < a) {
            out.words_.push_back(other.words_[j++]);
        } else {
            const unsigned e = exp_bits(words_[i]) + exp_bits(other.words_[j]);
            if (e > max_exponent) {
                throw std::out_of_range("monomial exponent overflow");
            }
            out.words_.push_back(a | e);
            ++i;
            ++j;
        }
    }
    out.words_.insert(out.words_.end(), words_.begin() + static_cast<std::ptrdiff_t>(i), words_.end());
    out.words_.insert(out.words_.end(), other.words_.begin() + static_cast<std::ptrdiff_t>(j), other.words_.end());
    return out;
}

Monomial Monomial::lowered(std::size_t i) const
{
    Monomial out = *this;
    if (exp_bits(out.words_[i]) == 1) {
        out.words_.erase(out.words_.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
        --out.words_[i];
    }
    return out;
}

Monomial Monomial::shifted(int k) const
{
    Monomial out;
    out.words_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const auto f = factor(i);
        out.words_.push_back(pack({f.var.kind, f.var.offset + k}, f.exponent));
    }
    return out;
}

std::size_t Monomial::hash() const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
        h ^= w;
        h *= 0x100000001b3ull;
    }
    return h;
}

Polynomial::Polynomial(const Rational &c)
{
    if (!altau::is_zero(c)) {
        terms_.emplace_back(Monomial{}, c);
    }
}

Polynomial Polynomial::variable(VarId v) { return monomial(Monomial(v), 1); }

Polynomial Polynomial::monomial(Monomial m, Rational c)
{
    Polynomial p;
    if (!altau::is_zero(c)) {
        p.terms_.emplace_back(std::move(m), std::move(c));
    }
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms)
{
    Accumulator acc;
    for (auto &[m, c] : terms) {
        acc[m] += c;
    }
    Polynomial p;
    p.terms_ = drain(acc);
    return p;
}

unsigned Polynomial::degree() const
{
    unsigned d = 0;
    for (const auto &t : terms_) {
        d = std::max(d, t.first.degree());
    }
    return d;
}

Rational Polynomial::constant_term() const
{
    if (!terms_.empty() && terms_.front().first.is_one()) {
        return terms_.front().second;
    }
    return 0;
}

Rational Polynomial::coefficient(const Monomial &m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term &t, const Monomial &k) { return t.first < k; });
    return (it != terms_.end() && it->first == m) ? it->second : Rational(0);
}

std::pair<int, int> Polynomial::offset_range() const
{
    bool any = false;
    int lo = 0, hi = 0;
    for (const auto &t : terms_) {
        for (std::size_t i = 0; i < t.first.size(); ++i) {
            const int o = t.first.factor(i).var.offset;
            lo = any ? std::min(lo, o) : o;
            hi = any ? std::max(hi, o) : o;
            any = true;
        }
    }
    return {lo, hi};
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    if (other.terms_.empty()) {
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() && j != other.terms_.end()) {
        if (i->first < j->first) {
            out.push_back(std::move(*i++));
        } else if (j->first < i->first) {
            out.push_back(*j++);
        } else {
            Rational c = i->second + j->second;
            if (!altau::is_zero(c)) {
                out.emplace_back(std::move(i->first), std::move(c));
            }
            ++i;
            ++j;
        }
    }
    std::move(i, terms_.end(), std::back_inserter(out));
    std::copy(j, other.terms_.end(), std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) { return *this += -other; }

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto &t : p.terms_) {
        t.second = -t.second;
    }
    return p;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.terms_.size() == 1 && a.terms_.front().first.is_one()) {
        return b * a.terms_.front().second;
    }
    if (b.terms_.size() == 1 && b.terms_.front().first.is_one()) {
        return a * b.terms_.front().second;
    }
    Accumulator acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            acc[ma * mb] += ca * cb;
        }
    }
    Polynomial p;
    p.terms_ = drain(acc);
    return p;
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
    *this = *this * other;
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (altau::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

Polynomial Polynomial::shifted(int k) const
{
    if (k == 0) {
        return *this;
    }
    Polynomial p;
    p.terms_.reserve(terms_.size());
    for (const auto &[m, c] : terms_) {
        p.terms_.emplace_back(m.shifted(k), c);
    }
    return p;
}

Rational Polynomial::evaluate(const std::function<Rational(VarId)> &value) const
{
    Rational total = 0;
    for (const auto &[m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto f = m.factor(i);
            t *= power(value(f.var), static_cast<int>(f.exponent));
        }
        total += t;
    }
    return total;
}

std::string variable_name(VarId v)
{
    std::string s = v.kind == VarKind::Q ? "q[n" : "r[n";
    if (v.offset > 0) {
        s += "+" + std::to_string(v.offset);
    } else if (v.offset < 0) {
        s += std::to_string(v.offset);
    }
    return s + "]";
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            out += sgn(c) < 0 ? "-" : "";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string body;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto f = m.factor(i);
            if (!body.empty()) {
                body += "*";
            }
            body += variable_name(f.var);
            if (f.exponent > 1) {
                body += "^" + std::to_string(f.exponent);
            }
        }
        if (body.empty()) {
            out += to_display_string(mag);
        } else if (mag == 1) {
            out += body;
        } else {
            out += to_display_string(mag) + "*" + body;
        }
    }
    return out;
}

Polynomial poly_arith(const Polynomial &a, const Polynomial &b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return a + b;
    case ArithOp::Sub:
        return a - b;
    case ArithOp::Mul:
        return a * b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

Polynomial shift(const Polynomial &f, int k) { return f.shifted(k); }

} // namespace altau
