#ifndef ALTAU_CUE_HPP
#define ALTAU_CUE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <altau/index.hpp>
#include <altau/matrix.hpp>
#include <altau/polynomial.hpp>
#include <altau/rational.hpp>
#include <altau/report.hpp>
#include <altau/series.hpp>

namespace altau
{

// The solution generated by the symbol (1 + Q zeta)(1 + Q / zeta), 0 <= Q < 1, at lattice point n.
struct CueParams {
    Rational Q;
    int n = 0;
};

// Throws std::invalid_argument unless 0 <= Q < 1.
void validate_q(const Rational &Q);

// q(n, 0) = r(n, 0) = (-1)^n Q^n (1 - Q^2) / (1 - Q^{2n+2}); requires n >= 0.
Rational cue_initial_value(const Rational &Q, int n);
std::pair<Rational, Rational> cue_initial_data(const CueParams &params);

// Substitutes q_{n+i}, r_{n+i} by their initial values at lattice point n + i.
// Throws std::domain_error if a negative lattice site is needed.
Rational evaluate_at_initial_data(const Polynomial &f, const Rational &Q, int n);

struct NumericCoefficients {
    Rational a, b, c;
};

// Closed forms of a_{sign,p}(n), b_{sign,p}(n), c_{sign,p}(n). Requires n >= 1; throws
// std::domain_error at Q = 0 when a form carries a negative power of Q.
NumericCoefficients cue_coefficients(Sign sign, const Rational &Q, int n, int p);

struct NumericResolvent {
    Sign sign = Sign::Minus;
    int order = 0;
    // Full coefficient matrices, constant matrix included at p = 0.
    std::vector<RatMatrix> coeffs;

    RatMatrixSeries series() const;
};

NumericResolvent cue_resolvent(Sign sign, const CueParams &params, int order);

// Lambda(R) U - U R = 0 with R taken from the closed forms at n and n + 1 and U at the
// initial data of site n, checked at every lambda-power the truncation determines.
bool check_numeric_resolvent_equation(Sign sign, const CueParams &params, int order);

// Symbol (1 + Q zeta)^z (1 + Q / zeta)^{z'} times exp(sum_v s_v zeta^{alpha_v p_v}).
struct ToeplitzSymbol {
    Rational Q;
    int z = 1;
    int zprime = 1;
};

// Z(n, s) = det(psi_{m-l})_{l,m<n} truncated to total degree `degree` in the active times
// (all p >= 1); Z(0, s) = 1.
TimeSeries toeplitz_partition(const ToeplitzSymbol &symbol, int n, const std::vector<DerivIndex> &vars, int degree);
// log Z(n, s) for the symbol (1 + Q zeta)(1 + Q / zeta), constant dropped.
TimeSeries toeplitz_tau(const CueParams &params, const std::vector<DerivIndex> &vars, int degree);

// True when the plus indices and the minus indices each sum to at most n. Only there does
// the generic Omega avoid lattice sites below 0, where Z(m) has its boundary at m = 0.
bool in_stable_range(const CorrelatorSpec &spec, int n);

// <tau_{alpha_1,i_1} ... tau_{alpha_k,i_k}>(n - 1) from the closed resolvents at n, using the
// two-point kernel 1/(lambda - mu)^2 for every sign pair. Agrees with the Toeplitz oracle
// inside in_stable_range. Specs containing p = 0 give 0. Requires k >= 2 and n >= 1.
Rational cue_correlator_mr(const CorrelatorSpec &spec, const CueParams &params);

// d^k log Z(m, s) / ds^{alpha_1,i_1} ... at s = 0, from the Toeplitz determinant.
// Requires all p >= 1 and degree >= k.
Rational cue_correlator_oracle(const CorrelatorSpec &spec, int m, const Rational &Q, int degree);

// Z(n, s^{+,1}) against its closed polynomial for n <= nmax.
CheckReport check_partition_polynomial(const Rational &Q, int nmax);
// Z(n, 0) = (1 - Q^{2n+2}) / (1 - Q^2) for n <= nmax.
CheckReport check_partition_constant(const Rational &Q, int nmax);
// Tau-function, 2-Toda and ratio relations at s = 0 for 1 <= m <= mmax.
CheckReport tau_relation_checks(const Rational &Q, int mmax);
// Closed resolvents against the generic ones at initial data, the numeric resolvent
// equation, tr = 1 and det = 0, for n <= nmax and orders <= order.
CheckReport check_closed_resolvents(const Rational &Q, int nmax, int order);
// cue_correlator_mr(n) = cue_correlator_oracle(n - 1) for all specs with k <= kmax,
// indices 1..imax, 1 <= n <= nmax; one line per (n, k) for the stable range and one for
// the boundary specs unless include_boundary is false.
CheckReport check_correlators(const Rational &Q, int kmax, int imax, int nmax, bool include_boundary = true);

struct LppReport {
    int z = 0, zprime = 0, n = 0;
    Rational Q;
    // (1 - Q^2)^{z z'} Z(n, 0)
    Rational toeplitz;
    // Exact P(L <= n); the capped dynamic program has no truncation error.
    Rational probability;
    Rational truncation_bound;
    bool agree = false;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
};

// Requires 1 <= z, z' <= 3, 0 <= n <= 8. With samples > 0 also draws that many
// lattices (seeded, exact Bernoulli sampling; Q^2 needs a 64-bit denominator).
LppReport lpp_cdf_check(int z, int zprime, int n, const Rational &Q, std::uint64_t samples = 0, std::uint64_t seed = 1);

} // namespace altau

#endif
