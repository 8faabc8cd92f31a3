// limit_points.hpp — limit-point computations: the Hoffman and Guo root
// sequences, the named constants, pendant-path limits chi_u / chi'_u, the
// two-sided bridge limit, the greedy caterpillar approach sequence, and the
// A_alpha threshold roots s_1..s_4.
#pragma once

#include <string>
#include <vector>

#include "speclim/graph.hpp"

namespace speclim {

struct LimitReport {
    double value = 0.0;
    std::string defining_equation;
    double lo = 0.0, hi = 0.0;  // final bracket, lo < value < hi
    int iterations = 0;
    double residual = 0.0;  // |equation(value)|, < 1e-12 unless degenerate
};

// eta_n = beta^{1/2} + beta^{-1/2} with beta the positive root of
// x^{n+1} - (1 + x + ... + x^{n-1}). eta_1 = 2; eta_n increases to
// sqrt(2+sqrt(5)).
LimitReport hoffman_eta(int n);

// alpha_n = 2 + beta^{1/2} + beta^{-1/2} with beta the largest positive root
// of x^{n+1} - (1 + x + ... + x^{n-1})(sqrt(x)+1)^2, beta_0 = 1. alpha_0 = 4;
// increases to 2 + omega + 1/omega.
LimitReport guo_alpha(int n);

struct Constants {
    double tau;      // (sqrt(5)+1)/2
    double rho1;     // sqrt(2+sqrt(5))
    double rho2;     // (3/2) sqrt(2)
    double omega;    // real root of x^3 = x^2 + x + 1, by the cube-root formula
    double epsilon;  // cube-root formula; equals omega + 1/omega
    double tau1;     // 2 + sqrt(5)
    double tau2;     // 2 + epsilon
};

Constants constants();

// Limit of rho_{A_alpha}(G_u(P_n)) as the pendant path grows. Degenerate
// cases (the compound is a path, or no root above 2 exists) report value 2
// with tag "degenerate".
LimitReport chi_u(const Graph& g, int u, double alpha);

// Limit of rho_{A_alpha}(G_u(P_n,P_n)); always >= chi_u.
LimitReport chi2_u(const Graph& g, int u, double alpha);

// Limit of rho_{A_alpha}(XY(x,y;n)) = max of the two one-sided limits.
LimitReport xy_limit(const Graph& x_graph, int x, const Graph& y_graph, int y, double alpha);

struct ShearerStep {
    Caterpillar caterpillar;
    double radius = 0.0;
};

// Greedy nested caterpillar sequence with radii increasing toward target.
// Each step extends the spine by one vertex and then attaches pendant legs
// at the new spine vertex while the radius stays <= target.
// Requires target >= sqrt(2+sqrt(5)) - 1e-9.
std::vector<ShearerStep> shearer_approach(double target, int steps);

// s1 = 4/(n+1+sqrt((n+1)^2-16)) (needs n >= 4); s2, s3, s4 are the roots of
// 2a^3-11a^2+16a-3, a^3-6a^2+9a-1, 2a^3-13a^2+20a-1 in (0,1) with the
// expected leading digits (0.2192, 0.1206, 0.0517).
struct AalphaThresholds {
    double s1, s2, s3, s4;
};

AalphaThresholds aalpha_thresholds(int n);

}  // namespace speclim
