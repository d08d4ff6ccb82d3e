#ifndef ALTAU_SERIES_HPP
#define ALTAU_SERIES_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <altau/index.hpp>
#include <altau/polynomial.hpp>
#include <altau/rational.hpp>

namespace altau
{

// Truncated power series in the times s^{alpha,p} listed in `variables`, kept to
// total degree <= max_degree. The constant term is stored separately.
class TimeSeries
{
public:
    using Exponents = std::vector<int>;

    TimeSeries(std::vector<DerivIndex> variables, int max_degree, Rational constant = 0);

    // The series s^{variables[i]}.
    static TimeSeries variable(std::vector<DerivIndex> variables, int max_degree, std::size_t i);

    const std::vector<DerivIndex> &variables() const { return vars_; }
    int max_degree() const { return degree_; }
    const Rational &constant_term() const { return constant_; }
    // Terms of total degree >= 1.
    const std::map<Exponents, Rational> &terms() const { return terms_; }

    Rational coefficient(const Exponents &e) const;
    void add_term(const Exponents &e, const Rational &c);

    // d^k/ds^{i_1}...ds^{i_k} at s = 0, the indices given as positions into variables().
    Rational derivative_at_zero(const std::vector<std::size_t> &positions) const;

    TimeSeries &operator+=(const TimeSeries &o);
    TimeSeries &operator-=(const TimeSeries &o);
    TimeSeries &operator*=(const Rational &c);
    friend TimeSeries operator+(TimeSeries a, const TimeSeries &b) { return a += b; }
    friend TimeSeries operator-(TimeSeries a, const TimeSeries &b) { return a -= b; }
    friend TimeSeries operator*(TimeSeries a, const Rational &c) { return a *= c; }
    friend TimeSeries operator*(const TimeSeries &a, const TimeSeries &b);
    friend bool operator==(const TimeSeries &, const TimeSeries &) = default;

    // Requires a nonzero constant term (std::domain_error otherwise).
    TimeSeries inverse() const;

private:
    void check_compatible(const TimeSeries &o) const;

    std::vector<DerivIndex> vars_;
    int degree_;
    Rational constant_;
    std::map<Exponents, Rational> terms_;
};

// log(Z / Z_0); the constant log Z_0 is dropped, so the result has zero constant term.
TimeSeries time_series_log(const TimeSeries &z);
// exp(L) for L with zero constant term (std::domain_error otherwise).
TimeSeries time_series_exp(const TimeSeries &l);

// Modulus ordering of the spectral variables lambda_1..lambda_k: every '+' variable
// dominates every '-' variable, and within a sign class earlier variables dominate.
struct Regime {
    std::vector<Sign> signs;

    std::size_t size() const { return signs.size(); }
    bool dominates(std::size_t a, std::size_t b) const;

    friend bool operator==(const Regime &, const Regime &) = default;
};

// Truncated multivariate Laurent series in lambda_1..lambda_k, expanded in a Regime.
// Only terms with |exponent of lambda_v| <= truncation[v] are stored.
class RegimeSeries
{
public:
    using Exponents = std::vector<int>;

    RegimeSeries(Regime regime, std::vector<int> truncation);

    const Regime &regime() const { return regime_; }
    const std::vector<int> &truncation() const { return truncation_; }
    const std::map<Exponents, Polynomial> &terms() const { return terms_; }

    bool in_window(const Exponents &e) const;
    void add_term(const Exponents &e, const Polynomial &c);
    Polynomial coefficient(const Exponents &e) const;

    friend RegimeSeries operator+(RegimeSeries a, const RegimeSeries &b);
    // Plain product of the stored terms, cut back to the window. Exact within the
    // window when, for every variable, each factor's exponents have a fixed sign
    // (as for kernels over one pair of variables).
    friend RegimeSeries operator*(const RegimeSeries &a, const RegimeSeries &b);
    friend bool operator==(const RegimeSeries &, const RegimeSeries &) = default;

private:
    Regime regime_;
    std::vector<int> truncation_;
    std::map<Exponents, Polynomial> terms_;
};

// 1/(lambda_i - lambda_j)^power expanded in the regime: with lambda_x dominant and
// lambda_y dominated, 1/(x-y)^n = sum_m binom(m+n-1, n-1) y^m x^{-m-n}.
RegimeSeries kernel_expand(const Regime &regime, std::size_t i, std::size_t j, int power, std::vector<int> truncation);

} // namespace altau

#endif
