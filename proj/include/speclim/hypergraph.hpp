// hypergraph.hpp — r-uniform hypergraphs, the adjacency-tensor spectral
// radius via nonnegative power iteration, loose-path based family
// constructors, and the extension/reduction operations.
#pragma once

#include <span>
#include <vector>

#include "speclim/graph.hpp"

namespace speclim {

// r-uniform hypergraph: every edge has exactly r distinct vertices and the
// edge set is non-empty. Edges are stored with sorted vertices; edge order is
// construction order.
struct UniformHypergraph {
    int n = 0;
    int r = 2;
    std::vector<std::vector<int>> edges;

    UniformHypergraph() = default;
    UniformHypergraph(int n_, int r_, std::vector<std::vector<int>> edges_);

    std::vector<int> degrees() const;
    bool is_connected() const;
    static UniformHypergraph from_graph(const Graph& g);
};

// f_H(x) = r * sum over edges of the product of incident coordinates.
double f_H(const UniformHypergraph& h, std::span<const double> x);

// y_j = sum over edges containing j of the product over the other vertices.
std::vector<double> tensor_apply(const UniformHypergraph& h, std::span<const double> x);

struct TensorRadiusReport {
    double value = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

// Spectral radius of the adjacency tensor by shifted power iteration on each
// connected component (max over components). Converges on the eigen-residual
// max_j |y_j - rho x_j^{r-1}| with the r-norm of x fixed to 1; throws after
// 1e5 iterations rather than truncating silently.
TensorRadiusReport tensor_radius(const UniformHypergraph& h);

// extend: append one fresh vertex to every edge (r -> r+1).
// reduce: remove one leaf vertex from every edge (r -> r-1); requires every
// edge to contain a leaf, and removes the largest-index leaf of each edge so
// that reduce(extend(H)) == H on the original vertex set.
UniformHypergraph extend(const UniformHypergraph& h);
UniformHypergraph reduce(const UniformHypergraph& h);

// Loose families; adjacent edges share exactly one vertex (except
// hypercycle(r,2), whose two edges share two vertices).
//   hyperpath(r,m):  m >= 1 edges, n = m(r-1)+1, edge k covers
//                    k(r-1) .. k(r-1)+r-1
//   hypercycle(r,m): m >= 3 closes the hyperpath into a ring (n = m(r-1));
//                    m = 2 is the two-edge cycle sharing vertices {0,1}
//   e_family(i,j,k):     three hyperpaths of lengths i,j,k at one vertex
//   f_family(i,j,k):     hyperpaths of lengths i,j,k at the three vertices
//                        of a fixed edge
//   g_family(i,j,k,l,t): hyperpaths of lengths i,j and l,t attached to the
//                        free (degree-1, unshared) vertices of the first and
//                        last edge of a central hyperpath of length k+2
UniformHypergraph hyperpath(int r, int m);
UniformHypergraph hypercycle(int r, int m);
UniformHypergraph e_family(int i, int j, int k);
UniformHypergraph f_family(int i, int j, int k);
UniformHypergraph g_family(int i, int j, int k, int l, int t);

}  // namespace speclim
