#ifndef ALTAU_TAU_STRUCTURE_HPP
#define ALTAU_TAU_STRUCTURE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <altau/hierarchy.hpp>
#include <altau/index.hpp>
#include <altau/polynomial.hpp>
#include <altau/series.hpp>

namespace altau
{

// Coefficient table of the k-point generating series, keyed by (i_1, ..., i_k).
struct OmegaTable {
    std::vector<Sign> signs;
    std::vector<int> max_index;
    std::map<std::vector<int>, Polynomial> entries;

    // The table as a series in lambda_1..lambda_k: entry (i) sits at lambda_v^{-(alpha_v i_v + 1)}.
    RegimeSeries generating_series() const;
};

struct TauReport {
    bool passed = true;
    int checks = 0;
    struct Failure {
        std::string what;
        Polynomial witness;
    };
    std::vector<Failure> failures;

    void record(bool ok, const std::string &what, const Polynomial &witness);
};

// Two-point and multi-point Omega polynomials on top of a shared Hierarchy. Results
// are cached; the object may be shared between threads.
class TauStructure
{
public:
    explicit TauStructure(Hierarchy &hierarchy);
    ~TauStructure();
    TauStructure(const TauStructure &) = delete;
    TauStructure &operator=(const TauStructure &) = delete;

    Hierarchy &hierarchy() { return h_; }

    // Coefficient of lambda^{e1} mu^{e2} in
    //   alpha beta (tr(R_alpha(lambda) R_beta(mu)) / (lambda - mu)^2 - r_{alpha,beta}(lambda, mu)).
    Polynomial two_point_coefficient(Sign alpha, Sign beta, int e1, int e2);
    Polynomial omega_two_point(DerivIndex d1, DerivIndex d2);

    // D_{d_k} ... D_{d_3} Omega_{d_1; d_2}.
    Polynomial omega_multi_direct(const CorrelatorSpec &spec);

    // One entry of the closed cyclic-sum formula (k >= 2).
    Polynomial omega_closed_entry(const std::vector<Sign> &signs, const std::vector<int> &indices);
    // All entries 0 <= i_v <= max_index[v].
    OmegaTable omega_multi_closed(const std::vector<Sign> &signs, const std::vector<int> &max_index);

    // The two-point series has no term off the lattice {(-alpha p - 1, -beta q - 1) : p, q >= 1}
    // for exponents |e_v| <= window.
    IdentityCheck check_two_point_support(Sign alpha, Sign beta, int window);

    // Symmetry, derivation compatibility and (Lambda - 1) Omega = alpha D(a) for all
    // indices p <= pmax, q <= qmax, r <= rmax and all signs.
    TauReport verify(int pmax, int qmax, int rmax);

private:
    struct Impl;
    Hierarchy &h_;
    std::unique_ptr<Impl> impl_;
};

// Throws std::invalid_argument unless p, q <= order - 1.
Polynomial omega_two_point(TauStructure &t, DerivIndex d1, DerivIndex d2, int order);
// Throws std::invalid_argument for k < 2.
Polynomial omega_multi_direct(TauStructure &t, const CorrelatorSpec &spec);
OmegaTable omega_multi_closed(TauStructure &t, const std::vector<Sign> &signs, const std::vector<int> &max_index);
TauReport verify_tau_structure(TauStructure &t, int pmax, int qmax, int rmax);

struct TheoremReport {
    bool passed = true;
    int entries = 0;
    std::vector<std::string> mismatches;
};

// Compares the closed formula with nested derivation for every entry
// 1 <= i_v <= max_index of the given sign pattern.
TheoremReport check_closed_formula(TauStructure &t, const std::vector<Sign> &signs, int max_index);

} // namespace altau

#endif
