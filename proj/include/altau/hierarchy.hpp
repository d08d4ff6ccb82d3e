#ifndef ALTAU_HIERARCHY_HPP
#define ALTAU_HIERARCHY_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <altau/index.hpp>
#include <altau/matrix.hpp>
#include <altau/polynomial.hpp>
#include <altau/resolvent.hpp>

namespace altau
{

struct IdentityCheck {
    bool holds = true;
    // First nonzero discrepancy, when the identity fails.
    Polynomial witness;
    std::string where;
};

// The abstract AL hierarchy on the ring of q_{n+i}, r_{n+i}: both basic matrix
// resolvents (extended on demand) and the derivations D_{alpha,p}. Safe to share
// between threads; caches are mutex-guarded and only ever grow.
class Hierarchy
{
public:
    Hierarchy();
    Hierarchy(const Hierarchy &) = delete;
    Hierarchy &operator=(const Hierarchy &) = delete;

    // Order-p coefficients (a_p, b_p, c_p) of R_sign; the reference stays valid.
    const ResolventCoefficients &coefficients(Sign sign, int p);
    // Full order-p matrix coefficient of R_sign.
    PolyMatrix resolvent_coefficient(Sign sign, int p);
    ResolventBundle resolvent(Sign sign, int order);
    VMatrix v_matrix(DerivIndex d);

    // D_d(q_n) or D_d(r_n).
    const Polynomial &generator_image(DerivIndex d, VarKind target);
    // D_d of an arbitrary shifted variable, by admissibility.
    Polynomial image(DerivIndex d, VarId v);

    // Leibniz extension of the generator images.
    Polynomial apply(DerivIndex d, const Polynomial &f);
    Polynomial apply_all(const std::vector<DerivIndex> &ds, Polynomial f);
    Polynomial commutator(DerivIndex d1, DerivIndex d2, const Polynomial &f);
    // d/dt = D_{+,1} - D_{-,1} - D_{+,0} + D_{-,0}
    Polynomial t_flow(const Polynomial &f);

    // D_d R_sign(lambda) == [V_d(lambda), R_sign(lambda)] at every lambda-power the
    // order-N truncation of R_sign determines.
    IdentityCheck check_equivariance(DerivIndex d, Sign sign, int order);
    // D_d U == Lambda(V_d) U - U V_d, with D_d lambda = 0.
    IdentityCheck check_zero_curvature(DerivIndex d);

private:
    ResolventBuilder &builder(Sign sign) { return sign == Sign::Minus ? minus_ : plus_; }

    std::mutex mutex_;
    ResolventBuilder minus_;
    ResolventBuilder plus_;
    std::map<std::pair<DerivIndex, VarId>, Polynomial> images_;
};

// Operation forms that validate against an explicit resolvent order N.
// They throw std::invalid_argument when N is too small for the requested indices.
Polynomial apply_derivation(Hierarchy &h, DerivIndex d, const Polynomial &f, int order);
Polynomial commutator(Hierarchy &h, DerivIndex d1, DerivIndex d2, const Polynomial &f, int order);
Polynomial t_flow(Hierarchy &h, const Polynomial &f, int order);
IdentityCheck check_equivariance(Hierarchy &h, DerivIndex d, Sign sign, int order);

} // namespace altau

#endif
