#ifndef ALTAU_CHECKS_HPP
#define ALTAU_CHECKS_HPP

#include <string>
#include <vector>

#include <altau/hierarchy.hpp>
#include <altau/index.hpp>
#include <altau/report.hpp>
#include <altau/tau_structure.hpp>

namespace altau
{

// tr R = 1, det R = 0 and tr(R^2) = 1 coefficient-wise up to `order`.
CheckReport check_normalization(Hierarchy &h, Sign sign, int order);

// Lambda(R) U - U R = 0 at every lambda-power the order-N truncation determines:
// 0..N for R_-, 1-N..1 for R_+.
CheckReport check_resolvent_equation(Hierarchy &h, Sign sign, int order);

// D_{beta,q} R_alpha = [V_{beta,q}, R_alpha] for both alpha, both beta and q <= qmax.
CheckReport check_equivariance_suite(Hierarchy &h, int qmax, int order);

// D_{beta,q} U = Lambda(V) U - U V for both beta and q <= qmax.
CheckReport check_zero_curvature_suite(Hierarchy &h, int qmax);

// [D_{alpha,p}, D_{beta,q}] = 0 on q_n and r_n for all sign pairs and p, q <= pmax;
// one line per (alpha, p, beta, q).
CheckReport check_commutativity(Hierarchy &h, int pmax);

CheckReport tau_report_lines(const TauReport &report, const std::string &name);

// Closed formula against nested derivation, one line per sign pattern.
CheckReport check_closed_formula_patterns(TauStructure &t, const std::vector<std::vector<Sign>> &patterns, int max_index);

// Every sign pattern of length k.
std::vector<std::vector<Sign>> all_sign_patterns(int k);

struct VerifyOptions {
    int resolvent_order = 8;
    int equivariance_max = 4;
    int equivariance_order = 6;
    int commute_max = 3;
    int tau_pmax = 4;
    int tau_qmax = 4;
    int tau_rmax = 2;
    int closed_k3_max = 2;
    // CUE suites at Q = 1/2 and 1/3; correlators are compared in the stable range only.
    bool cue = true;
    int cue_max = 4;
};

// Every identity suite above plus the CUE checks, in one report.
CheckReport verify_all(Hierarchy &h, TauStructure &t, const VerifyOptions &options);

} // namespace altau

#endif
