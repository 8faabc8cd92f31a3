// matrices.hpp — matrix models (A, L, Q, A_alpha, signed, Hermitian, skew)
// and the spectrum-preserving switching / doubling transformations.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "speclim/graph.hpp"

namespace speclim {

enum class MatrixSymmetry { symmetric, hermitian, skew_symmetric, general };

// Dense square matrix. Entries are complex even for the real models, with an
// all_real fast path, so one eigensolver interface serves every model.
// Declared symmetry holds entrywise to exact equality: entries are
// constructed, never measured.
struct DenseMatrix {
    int n = 0;
    MatrixSymmetry symmetry = MatrixSymmetry::general;
    bool all_real = true;
    std::vector<std::complex<double>> a;  // row-major

    DenseMatrix() = default;
    DenseMatrix(int n_, MatrixSymmetry sym, bool real);

    std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const {
        return a[static_cast<std::size_t>(i) * n + j];
    }
};

DenseMatrix adjacency(const Graph& g);
DenseMatrix laplacian(const Graph& g);
DenseMatrix signless_laplacian(const Graph& g);
DenseMatrix a_alpha(const Graph& g, double alpha);  // alpha in [0,1]
DenseMatrix signed_adjacency(const SignedGraph& sg);
DenseMatrix hermitian_adjacency(const MixedGraph& mg);
DenseMatrix skew_adjacency(const OrientedGraph& og);

// Principal submatrix with row/column v removed.
DenseMatrix delete_vertex(const DenseMatrix& m, int v);

// Signed switching: reverse the signs of all edges in the cut [U, V\U].
// in_cut_set[v] != 0 marks membership in U.
SignedGraph switch_signed(const SignedGraph& sg, const std::vector<int>& in_cut_set);

// Oriented switching: reverse the orientation of every edge in the cut.
OrientedGraph switch_oriented(const OrientedGraph& og, const std::vector<int>& in_cut_set);

// Converse: reverse every arc not contained in a digon.
MixedGraph converse(const MixedGraph& mg);

// Four-way switching partition: cls[v] in {0,1,2,3} standing for the classes
// V_1, V_{-1}, V_i, V_{-i}.
struct FourWayPartition {
    std::vector<int> cls;

    static constexpr int v_plus1 = 0;
    static constexpr int v_minus1 = 1;
    static constexpr int v_plusi = 2;
    static constexpr int v_minusi = 3;
};

// Throws std::runtime_error naming condition (a) or (b) when violated.
void validate_partition(const MixedGraph& mg, const FourWayPartition& p);

MixedGraph four_way_switch(const MixedGraph& mg, const FourWayPartition& p);

// Bipartite double: vertex u_i becomes (i,1),(i,2) at indices 2i, 2i+1, and
// u_ik -> u_jl iff u_i -> u_j and k != l. Its skew matrix is S(G) (x) A(K_2).
OrientedGraph bipartite_double(const OrientedGraph& og);

// Debug export: {"n":..,"symmetry":..,"entries":[[re,im],...]} row-major.
std::string matrix_to_json(const DenseMatrix& m);

}  // namespace speclim
