#ifndef ALTAU_POLYNOMIAL_HPP
#define ALTAU_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <altau/rational.hpp>

namespace altau
{

enum class VarKind : std::uint8_t { Q = 0, R = 1 };

// The indeterminate q_{n+offset} or r_{n+offset}. Ordered by kind, then offset.
struct VarId {
    VarKind kind = VarKind::Q;
    int offset = 0;

    auto operator<=>(const VarId &) const = default;
};

inline VarId q_var(int offset) { return {VarKind::Q, offset}; }
inline VarId r_var(int offset) { return {VarKind::R, offset}; }

// Product of powers of distinct variables, stored as packed (variable, exponent)
// words sorted by variable. The packing preserves the VarId order, so comparing
// the word vectors lexicographically gives the canonical monomial order.
class Monomial
{
public:
    static constexpr int max_offset = (1 << 22) - 1;
    static constexpr unsigned max_exponent = 255;

    struct Factor {
        VarId var;
        unsigned exponent;
    };

    Monomial() = default;
    explicit Monomial(VarId v, unsigned exponent = 1);
    Monomial(std::initializer_list<Factor> factors);

    bool is_one() const { return words_.empty(); }
    std::size_t size() const { return words_.size(); }
    Factor factor(std::size_t i) const;
    unsigned degree() const;
    unsigned exponent_of(VarId v) const;

    Monomial operator*(const Monomial &other) const;
    // Removes one power of factor i.
    Monomial lowered(std::size_t i) const;
    Monomial shifted(int k) const;

    const std::vector<std::uint32_t> &words() const { return words_; }

    auto operator<=>(const Monomial &) const = default;

    std::size_t hash() const noexcept;

private:
    std::vector<std::uint32_t> words_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept { return m.hash(); }
};

// Element of Q[q_{n+i}, r_{n+i} : i in Z]. Terms are kept sorted by monomial with
// no zero coefficients, so structural equality is polynomial equality.
class Polynomial
{
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational &c); // NOLINT: constants convert implicitly
    Polynomial(long c) : Polynomial(Rational(c)) {} // NOLINT
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT

    static Polynomial variable(VarId v);
    static Polynomial monomial(Monomial m, Rational c = 1);
    // Builds from arbitrary (possibly repeated / zero) terms.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term> &terms() const { return terms_; }
    unsigned degree() const;
    // Coefficient of the monomial 1.
    Rational constant_term() const;
    Rational coefficient(const Monomial &m) const;
    // Smallest and largest offsets of variables that occur; {0,0} for constants.
    std::pair<int, int> offset_range() const;

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
    friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    // Applies Lambda^k: every variable offset increases by k.
    Polynomial shifted(int k) const;

    Rational evaluate(const std::function<Rational(VarId)> &value) const;

    // e.g. "q[n]*r[n-1]^2 - 1/2*r[n+1]".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

Polynomial poly_arith(const Polynomial &a, const Polynomial &b, ArithOp op);
Polynomial shift(const Polynomial &f, int k);

inline bool is_zero(const Polynomial &p) { return p.is_zero(); }

std::string variable_name(VarId v);

} // namespace altau

#endif
