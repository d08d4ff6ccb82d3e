#include <altau/series.hpp>

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace altau
{

namespace
{

int total_degree(const std::vector<int> &e) { return std::accumulate(e.begin(), e.end(), 0); }

Rational factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(int n, int k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

} // namespace

TimeSeries::TimeSeries(std::vector<DerivIndex> variables, int max_degree, Rational constant)
    : vars_(std::move(variables)), degree_(max_degree), constant_(std::move(constant))
{
    if (degree_ < 0) {
        throw std::invalid_argument("negative series degree");
    }
}

TimeSeries TimeSeries::variable(std::vector<DerivIndex> variables, int max_degree, std::size_t i)
{
    TimeSeries s(std::move(variables), max_degree);
    Exponents e(s.vars_.size(), 0);
    e.at(i) = 1;
    s.add_term(e, 1);
    return s;
}

Rational TimeSeries::coefficient(const Exponents &e) const
{
    if (total_degree(e) == 0) {
        return constant_;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TimeSeries::add_term(const Exponents &e, const Rational &c)
{
    if (e.size() != vars_.size()) {
        throw std::invalid_argument("exponent vector has wrong length");
    }
    const int d = total_degree(e);
    if (d == 0) {
        constant_ += c;
        return;
    }
    if (d > degree_) {
        return;
    }
    auto &slot = terms_[e];
    slot += c;
    if (is_zero(slot)) {
        terms_.erase(e);
    }
}

Rational TimeSeries::derivative_at_zero(const std::vector<std::size_t> &positions) const
{
    Exponents e(vars_.size(), 0);
    for (auto i : positions) {
        ++e.at(i);
    }
    if (total_degree(e) > degree_) {
        throw std::out_of_range("derivative order exceeds series degree");
    }
    Rational c = coefficient(e);
    for (int k : e) {
        c *= factorial(k);
    }
    return c;
}

void TimeSeries::check_compatible(const TimeSeries &o) const
{
    if (vars_ != o.vars_ || degree_ != o.degree_) {
        throw std::invalid_argument("time series over different variables or degrees");
    }
}

TimeSeries &TimeSeries::operator+=(const TimeSeries &o)
{
    check_compatible(o);
    constant_ += o.constant_;
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

TimeSeries &TimeSeries::operator-=(const TimeSeries &o)
{
    check_compatible(o);
    constant_ -= o.constant_;
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

TimeSeries &TimeSeries::operator*=(const Rational &c)
{
    if (is_zero(c)) {
        constant_ = 0;
        terms_.clear();
        return *this;
    }
    constant_ *= c;
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

TimeSeries operator*(const TimeSeries &a, const TimeSeries &b)
{
    a.check_compatible(b);
    TimeSeries out(a.vars_, a.degree_, a.constant_ * b.constant_);
    if (!is_zero(a.constant_)) {
        for (const auto &[e, c] : b.terms_) {
            out.add_term(e, a.constant_ * c);
        }
    }
    if (!is_zero(b.constant_)) {
        for (const auto &[e, c] : a.terms_) {
            out.add_term(e, b.constant_ * c);
        }
    }
    TimeSeries::Exponents sum(a.vars_.size());
    for (const auto &[ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        for (const auto &[eb, cb] : b.terms_) {
            if (da + total_degree(eb) > a.degree_) {
                continue;
            }
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum[i] = ea[i] + eb[i];
            }
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

TimeSeries TimeSeries::inverse() const
{
    if (is_zero(constant_)) {
        throw std::domain_error("series with zero constant term is not invertible");
    }
    // 1/(c(1+u)) = (1/c) sum_k (-u)^k
    TimeSeries u = *this * (Rational(1) / constant_);
    u.constant_ = 0;
    TimeSeries minus_u = u * Rational(-1);
    TimeSeries power(vars_, degree_, 1);
    TimeSeries total(vars_, degree_, 1);
    for (int k = 1; k <= degree_; ++k) {
        power = power * minus_u;
        total += power;
    }
    return total * (Rational(1) / constant_);
}

TimeSeries time_series_log(const TimeSeries &z)
{
    if (is_zero(z.constant_term())) {
        throw std::domain_error("log of a series with zero constant term");
    }
    TimeSeries u = z * (Rational(1) / z.constant_term());
    u -= TimeSeries(z.variables(), z.max_degree(), 1);
    TimeSeries power(z.variables(), z.max_degree(), 1);
    TimeSeries total(z.variables(), z.max_degree());
    for (int k = 1; k <= z.max_degree(); ++k) {
        power = power * u;
        total += power * Rational((k % 2 == 1) ? 1 : -1, k);
    }
    return total;
}

TimeSeries time_series_exp(const TimeSeries &l)
{
    if (!is_zero(l.constant_term())) {
        throw std::domain_error("exp needs a series with zero constant term");
    }
    TimeSeries power(l.variables(), l.max_degree(), 1);
    TimeSeries total(l.variables(), l.max_degree(), 1);
    for (int k = 1; k <= l.max_degree(); ++k) {
        power = power * l * Rational(1, k);
        total += power;
    }
    return total;
}

bool Regime::dominates(std::size_t a, std::size_t b) const
{
    if (signs.at(a) != signs.at(b)) {
        return signs[a] == Sign::Plus;
    }
    return a < b;
}

RegimeSeries::RegimeSeries(Regime regime, std::vector<int> truncation)
    : regime_(std::move(regime)), truncation_(std::move(truncation))
{
    if (truncation_.size() != regime_.size()) {
        throw std::invalid_argument("one truncation order per variable required");
    }
}

bool RegimeSeries::in_window(const Exponents &e) const
{
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (std::abs(e[v]) > truncation_[v]) {
            return false;
        }
    }
    return true;
}

void RegimeSeries::add_term(const Exponents &e, const Polynomial &c)
{
    if (e.size() != regime_.size()) {
        throw std::invalid_argument("exponent vector has wrong length");
    }
    if (!in_window(e) || c.is_zero()) {
        return;
    }
    auto &slot = terms_[e];
    slot += c;
    if (slot.is_zero()) {
        terms_.erase(e);
    }
}

Polynomial RegimeSeries::coefficient(const Exponents &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Polynomial{} : it->second;
}

RegimeSeries operator+(RegimeSeries a, const RegimeSeries &b)
{
    if (a.regime_.signs != b.regime_.signs) {
        throw std::invalid_argument("regime series over different regimes");
    }
    for (std::size_t v = 0; v < a.truncation_.size(); ++v) {
        a.truncation_[v] = std::min(a.truncation_[v], b.truncation_[v]);
    }
    RegimeSeries out(a.regime_, a.truncation_);
    for (const auto &[e, c] : a.terms_) {
        out.add_term(e, c);
    }
    for (const auto &[e, c] : b.terms_) {
        out.add_term(e, c);
    }
    return out;
}

RegimeSeries operator*(const RegimeSeries &a, const RegimeSeries &b)
{
    if (a.regime_.signs != b.regime_.signs) {
        throw std::invalid_argument("regime series over different regimes");
    }
    std::vector<int> trunc(a.truncation_.size());
    for (std::size_t v = 0; v < trunc.size(); ++v) {
        trunc[v] = std::min(a.truncation_[v], b.truncation_[v]);
    }
    RegimeSeries out(a.regime_, trunc);
    RegimeSeries::Exponents sum(trunc.size());
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < sum.size(); ++v) {
                sum[v] = ea[v] + eb[v];
            }
            if (out.in_window(sum)) {
                out.add_term(sum, ca * cb);
            }
        }
    }
    return out;
}

RegimeSeries kernel_expand(const Regime &regime, std::size_t i, std::size_t j, int power, std::vector<int> truncation)
{
    if (i == j) {
        throw std::invalid_argument("kernel needs two distinct variables");
    }
    if (power < 1) {
        throw std::invalid_argument("kernel power must be positive");
    }
    const bool forward = regime.dominates(i, j);
    const std::size_t x = forward ? i : j;
    const std::size_t y = forward ? j : i;
    // 1/(lambda_i - lambda_j)^n = (-1)^n / (lambda_j - lambda_i)^n
    const Rational sign = (forward || power % 2 == 0) ? 1 : -1;
    RegimeSeries out(regime, std::move(truncation));
    RegimeSeries::Exponents e(regime.size(), 0);
    for (int m = 0; m <= out.truncation()[y] && m + power <= out.truncation()[x]; ++m) {
        e[y] = m;
        e[x] = -m - power;
        out.add_term(e, Polynomial(sign * binomial(m + power - 1, power - 1)));
    }
    return out;
}

} // namespace altau
