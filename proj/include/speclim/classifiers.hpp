// classifiers.hpp — structural + spectral membership tests for the
// characterization theorems behind each matrix model.
#pragma once

#include <optional>
#include <string>

#include "speclim/graph.hpp"

namespace speclim {

struct ClassificationResult {
    std::string model;   // "A", "L", "Q", "Aalpha", "Hermitian"
    std::string region;  // e.g. "<2", "=2", "(2,rho1)", "[rho1,rho2)", ">=rho2"
    std::optional<std::string> family;  // structural tag, e.g. "T(1,2,4)"
    double radius = 0.0;
    bool agreement = false;  // structural list <-> spectral interval
};

// Equality-at-threshold judgments use this tolerance together with a
// structural confirmation; spectral equality alone never classifies.
inline constexpr double kSpectralTol = 1e-8;

ClassificationResult classify_A(const Graph& g);
ClassificationResult classify_Q(const Graph& g);
ClassificationResult classify_L(const Graph& g);
ClassificationResult classify_Aalpha(const Graph& g, double alpha);
ClassificationResult classify_mixed(const MixedGraph& mg);

// Structural predicates for the A-model interval (2, sqrt(2+sqrt(5))):
// the T-shape subfamily and the H-shape subfamily with the b*(a,c) table.
bool in_T1_family(int a, int b, int c);            // sorted a <= b <= c
bool in_T2_family(int a, int b, int c);            // h-shape params, a <= c
int h_shape_bstar(int a, int c);                   // the b*(a,c) table

// Raw structural memberships, used both by the classifiers and by the
// exhaustive oracle sweeps (which check the lists in both directions).
struct AMembership {
    std::optional<std::string> lt2;       // the rho_A < 2 list
    std::optional<std::string> eq2;       // the rho_A = 2 list
    std::optional<std::string> interval;  // T_1 or T_2
};
AMembership a_membership(const Graph& g, const ShapeReport& sh);

struct QLMembership {
    std::optional<std::string> lt;     // < 4
    std::optional<std::string> eq;     // = 4
    std::optional<std::string> band1;  // (4, tau1]
    std::optional<std::string> band2;  // (tau1, tau2]
};
QLMembership q_membership(const Graph& g, const ShapeReport& sh);
QLMembership l_membership(const Graph& g, const ShapeReport& sh);

struct AalphaMembership {
    std::optional<std::string> lt2;
    std::optional<std::string> eq2;
};
AalphaMembership aalpha_membership(const Graph& g, const ShapeReport& sh, double alpha);

}  // namespace speclim
