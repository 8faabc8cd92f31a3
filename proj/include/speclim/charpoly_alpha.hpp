// charpoly_alpha.hpp — A_alpha characteristic-polynomial recurrences for
// paths, the end-deleted matrices B_n / H_n, cycles, their closed forms, and
// the bridge-join formula, all evaluated numerically at a point (lambda,
// alpha).
//
// Conventions: phi(P_n) is the A_alpha-polynomial of the n-vertex path,
// B_n / H_n are the principal submatrices of A_alpha(P_{n+1}) / A_alpha(P_{n+2})
// with one / both end rows deleted. Seeds: phi(P_0) = (1-2a)/(1-a)^2,
// phi(B_0) = phi(H_0) = 1; phi(P_1) = lambda. At alpha = 0 all three sequences
// coincide.
#pragma once

#include "speclim/graph.hpp"

namespace speclim {

struct AlphaPoint {
    double lambda = 0.0;
    double alpha = 0.0;  // in [0,1); the P_0 seed needs alpha != 1
};

double phi_path(int n, const AlphaPoint& p);
double phi_B(int n, const AlphaPoint& p);
double phi_H(int n, const AlphaPoint& p);

// phi(C_m) for a cycle on m >= 3 vertices.
double phi_cycle(int m, const AlphaPoint& p);

// Delta = sqrt((lambda-4a+2)(lambda-2)), s,t = (lambda-2a +- Delta)/2,
// h = (lambda-Delta)/(2a(lambda-2)+2). Requires a nonnegative discriminant.
struct ClosedForms {
    double delta, h, s, t;
};

ClosedForms closed_forms(const AlphaPoint& p);

// Ratios phi(B_{n-1})/phi(P_n) and phi(H_{n-2})/phi(B_{n-1}) at n = n_max,
// compared against their common limit h(lambda)_alpha. Requires lambda > 2.
struct RatioReport {
    int n = 0;
    double ratio_bp = 0.0;
    double ratio_hb = 0.0;
    double h = 0.0;
    double err_bp = 0.0;
    double err_hb = 0.0;
};

RatioReport ratio_limits(const AlphaPoint& p, int n_max);

// A_alpha-polynomial of the bridge join of g1 (at u) and g2 (at v), computed
// from the standalone polynomials of the parts:
//   phi = phi1*phi2 - a*phi1_u*phi2 - a*phi1*phi2_v + (2a-1)*phi1_u*phi2_v.
double join_phi(const Graph& g1, int u, const Graph& g2, int v, const AlphaPoint& p);

}  // namespace speclim
