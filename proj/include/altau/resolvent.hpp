#ifndef ALTAU_RESOLVENT_HPP
#define ALTAU_RESOLVENT_HPP

#include <deque>
#include <vector>

#include <altau/index.hpp>
#include <altau/matrix.hpp>
#include <altau/polynomial.hpp>

namespace altau
{

// Coefficients of the basic matrix resolvents
//   R_-(lambda) = diag(0,1) + sum_p lambda^p  [[a_p, b_p], [c_p, -a_p]]
//   R_+(lambda) = diag(1,0) + sum_p lambda^-p [[a_p, b_p], [c_p, -a_p]]
struct ResolventCoefficients {
    Polynomial a, b, c;
};

// The fixed matrix diag(0,1) (Minus) or diag(1,0) (Plus).
PolyMatrix resolvent_constant_matrix(Sign sign);

SeriesDirection series_direction(Sign sign);

// Full order-p coefficient matrix of R_sign, the constant matrix included at p = 0.
PolyMatrix resolvent_matrix(Sign sign, int p, const ResolventCoefficients &abc);

// U(lambda) = [[lambda, r_n], [lambda q_n, 1]] as a Laurent matrix.
PolyLaurentMatrix lax_u();

class ResolventBuilder
{
public:
    explicit ResolventBuilder(Sign sign);

    Sign sign() const { return sign_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Runs the recursion up to `order`. The redundant components of the resolvent
    // equation are checked at every order; a mismatch throws std::logic_error.
    void extend_to(int order);

    // References stay valid while the builder grows.
    const ResolventCoefficients &at(int p) const { return coeffs_.at(static_cast<std::size_t>(p)); }

private:
    void step();

    Sign sign_;
    std::deque<ResolventCoefficients> coeffs_;
};

struct ResolventBundle {
    Sign sign;
    MatrixSeries series;
    std::vector<Polynomial> a, b, c;

    int order() const { return series.order(); }
};

ResolventBundle compute_resolvent(Sign sign, int order);

struct ResolventAbc {
    std::vector<Polynomial> a, b, c;
};

ResolventAbc extract_abc(const ResolventBundle &bundle);

// Rebuilds R_sign from its a, b, c families.
MatrixSeries reconstruct_series(Sign sign, const ResolventAbc &abc);

// V_{sign,p}(lambda), a Laurent polynomial stored as a finite series: Minus in
// lambda^{-1} (exponents -p..0), Plus in lambda (exponents 0..p).
struct VMatrix {
    Sign sign;
    int p;
    MatrixSeries value;

    PolyLaurentMatrix laurent() const { return PolyLaurentMatrix::from_series(value); }
};

// Throws std::out_of_range if p exceeds the bundle order.
VMatrix compute_v(Sign sign, int p, const ResolventBundle &bundle);
VMatrix compute_v(Sign sign, int p, const ResolventBuilder &builder);

} // namespace altau

#endif
