// spectra.hpp — dense eigensolver contract and spectral radii for all models.
#pragma once

#include <vector>

#include "speclim/graph.hpp"
#include "speclim/matrices.hpp"

namespace speclim {

// Eigenvalues sorted ascending. For symmetric/Hermitian input these are the
// real eigenvalues; for a skew-symmetric S they are the (real) eigenvalues of
// the Hermitian matrix i*S, i.e. the signed imaginary parts of Sp(S), so the
// moduli of Sp(S) are their absolute values. radius = max |lambda| always.
struct Spectrum {
    std::vector<double> eigenvalues;
    double radius = 0.0;

    std::vector<double> moduli() const;
};

// Requires symmetry in {symmetric, hermitian, skew_symmetric} and finite
// entries; absolute accuracy ~1e-10 on desk-scale inputs.
Spectrum eigenvalues(const DenseMatrix& m);

enum class Model { A, L, Q, Aalpha };

double spectral_radius(const Graph& g, Model model, double alpha = 0.0);
double spectral_radius(const SignedGraph& sg);
double spectral_radius(const MixedGraph& mg);
double spectral_radius(const OrientedGraph& og);

// det(lambda*I - M) for real symmetric M, via a pivoted factorization; sign
// and magnitude are reliable away from roots.
double charpoly_eval(const DenseMatrix& m, double lambda);

}  // namespace speclim
