#ifndef ALTAU_MATRIX_HPP
#define ALTAU_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <altau/polynomial.hpp>
#include <altau/rational.hpp>

namespace altau
{

// 2x2 matrix over a commutative ring (Polynomial or Rational).
template <typename T>
struct Matrix2 {
    T e11{}, e12{}, e21{}, e22{};

    static Matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }

    T trace() const { return e11 + e22; }
    T det() const { return e11 * e22 - e12 * e21; }
    bool is_zero() const { return altau::is_zero(e11) && altau::is_zero(e12) && altau::is_zero(e21) && altau::is_zero(e22); }

    template <typename F>
    Matrix2 map(F &&f) const
    {
        return {f(e11), f(e12), f(e21), f(e22)};
    }

    Matrix2 &operator+=(const Matrix2 &o)
    {
        e11 += o.e11;
        e12 += o.e12;
        e21 += o.e21;
        e22 += o.e22;
        return *this;
    }
    Matrix2 &operator-=(const Matrix2 &o)
    {
        e11 -= o.e11;
        e12 -= o.e12;
        e21 -= o.e21;
        e22 -= o.e22;
        return *this;
    }
    friend Matrix2 operator+(Matrix2 a, const Matrix2 &b) { return a += b; }
    friend Matrix2 operator-(Matrix2 a, const Matrix2 &b) { return a -= b; }
    friend Matrix2 operator*(const Matrix2 &a, const Matrix2 &b)
    {
        return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22, a.e21 * b.e11 + a.e22 * b.e21,
                a.e21 * b.e12 + a.e22 * b.e22};
    }
    friend Matrix2 operator*(const Matrix2 &a, const Rational &c)
    {
        return {a.e11 * c, a.e12 * c, a.e21 * c, a.e22 * c};
    }
    friend bool operator==(const Matrix2 &, const Matrix2 &) = default;
};

template <typename T>
Matrix2<T> commutator(const Matrix2<T> &a, const Matrix2<T> &b)
{
    return a * b - b * a;
}

// Trace of a product without forming the last matrix product.
template <typename T>
T trace_of_product(const Matrix2<T> &a, const Matrix2<T> &b)
{
    return a.e11 * b.e11 + a.e12 * b.e21 + a.e21 * b.e12 + a.e22 * b.e22;
}

using PolyMatrix = Matrix2<Polynomial>;
using RatMatrix = Matrix2<Rational>;

inline PolyMatrix shift(const PolyMatrix &m, int k)
{
    return m.map([k](const Polynomial &p) { return p.shifted(k); });
}

enum class SeriesDirection { AscendingLambda, AscendingLambdaInverse };

// Truncated series sum_{p=0}^{order} C_p lambda^{+p} (AscendingLambda) or
// lambda^{-p} (AscendingLambdaInverse). Products keep the smaller order.
template <typename T>
class BasicMatrixSeries
{
public:
    BasicMatrixSeries(SeriesDirection dir, std::vector<Matrix2<T>> coeffs) : direction_(dir), coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("matrix series needs at least one coefficient");
        }
    }

    static BasicMatrixSeries zero(SeriesDirection dir, int order)
    {
        return BasicMatrixSeries(dir, std::vector<Matrix2<T>>(static_cast<std::size_t>(order) + 1));
    }
    static BasicMatrixSeries identity(SeriesDirection dir, int order)
    {
        auto s = zero(dir, order);
        s.coeffs_[0] = Matrix2<T>::identity();
        return s;
    }

    SeriesDirection direction() const { return direction_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Matrix2<T> &operator[](int p) const { return coeffs_.at(static_cast<std::size_t>(p)); }
    const std::vector<Matrix2<T>> &coefficients() const { return coeffs_; }
    // Power of lambda carried by coefficient p.
    int exponent(int p) const { return direction_ == SeriesDirection::AscendingLambda ? p : -p; }

    BasicMatrixSeries truncated(int order) const
    {
        std::vector<Matrix2<T>> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
        return BasicMatrixSeries(direction_, std::move(c));
    }

    // Coefficient-wise trace and determinant, up to the series order.
    std::vector<T> trace() const
    {
        std::vector<T> out;
        for (const auto &c : coeffs_) {
            out.push_back(c.trace());
        }
        return out;
    }
    std::vector<T> det() const
    {
        std::vector<T> out(coeffs_.size());
        for (std::size_t p = 0; p < coeffs_.size(); ++p) {
            for (std::size_t j = 0; j <= p; ++j) {
                const auto &a = coeffs_[j];
                const auto &b = coeffs_[p - j];
                out[p] += a.e11 * b.e22 - a.e12 * b.e21;
            }
        }
        return out;
    }

    friend BasicMatrixSeries operator*(const BasicMatrixSeries &a, const BasicMatrixSeries &b)
    {
        check_direction(a, b);
        const int n = std::min(a.order(), b.order());
        auto out = zero(a.direction_, n);
        for (int p = 0; p <= n; ++p) {
            for (int j = 0; j <= p; ++j) {
                out.coeffs_[static_cast<std::size_t>(p)] += a[j] * b[p - j];
            }
        }
        return out;
    }
    friend BasicMatrixSeries operator+(const BasicMatrixSeries &a, const BasicMatrixSeries &b)
    {
        check_direction(a, b);
        const int n = std::min(a.order(), b.order());
        auto out = zero(a.direction_, n);
        for (int p = 0; p <= n; ++p) {
            out.coeffs_[static_cast<std::size_t>(p)] = a[p] + b[p];
        }
        return out;
    }
    friend BasicMatrixSeries operator-(const BasicMatrixSeries &a, const BasicMatrixSeries &b)
    {
        check_direction(a, b);
        const int n = std::min(a.order(), b.order());
        auto out = zero(a.direction_, n);
        for (int p = 0; p <= n; ++p) {
            out.coeffs_[static_cast<std::size_t>(p)] = a[p] - b[p];
        }
        return out;
    }
    friend bool operator==(const BasicMatrixSeries &, const BasicMatrixSeries &) = default;

private:
    static void check_direction(const BasicMatrixSeries &a, const BasicMatrixSeries &b)
    {
        if (a.direction_ != b.direction_) {
            throw std::invalid_argument("matrix series direction mismatch");
        }
    }

    SeriesDirection direction_;
    std::vector<Matrix2<T>> coeffs_;
};

using MatrixSeries = BasicMatrixSeries<Polynomial>;
using RatMatrixSeries = BasicMatrixSeries<Rational>;

inline MatrixSeries mat_series_mul(const MatrixSeries &a, const MatrixSeries &b) { return a * b; }

// Finite Laurent polynomial in lambda with matrix coefficients; exponent -> coefficient.
template <typename T>
class LaurentMatrix
{
public:
    LaurentMatrix() = default;

    static LaurentMatrix from_series(const BasicMatrixSeries<T> &s)
    {
        LaurentMatrix out;
        for (int p = 0; p <= s.order(); ++p) {
            out.add(s.exponent(p), s[p]);
        }
        return out;
    }

    void add(int exponent, const Matrix2<T> &m)
    {
        auto &slot = coeffs_[exponent];
        slot += m;
        if (slot.is_zero()) {
            coeffs_.erase(exponent);
        }
    }

    Matrix2<T> at(int exponent) const
    {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? Matrix2<T>{} : it->second;
    }

    const std::map<int, Matrix2<T>> &coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    template <typename F>
    LaurentMatrix map(F &&f) const
    {
        LaurentMatrix out;
        for (const auto &[e, m] : coeffs_) {
            out.add(e, m.map(f));
        }
        return out;
    }

    friend LaurentMatrix operator*(const LaurentMatrix &a, const LaurentMatrix &b)
    {
        LaurentMatrix out;
        for (const auto &[ea, ma] : a.coeffs_) {
            for (const auto &[eb, mb] : b.coeffs_) {
                out.add(ea + eb, ma * mb);
            }
        }
        return out;
    }
    friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix &b)
    {
        for (const auto &[e, m] : b.coeffs_) {
            a.add(e, m);
        }
        return a;
    }
    friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix &b)
    {
        for (const auto &[e, m] : b.coeffs_) {
            a.add(e, Matrix2<T>{} - m);
        }
        return a;
    }
    friend bool operator==(const LaurentMatrix &, const LaurentMatrix &) = default;

private:
    std::map<int, Matrix2<T>> coeffs_;
};

using PolyLaurentMatrix = LaurentMatrix<Polynomial>;

} // namespace altau

#endif
