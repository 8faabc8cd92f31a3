// graph.hpp — core graph types, named-family constructors, structural recognizers.
//
// Vertices are dense integers 0..n-1. Every constructor documents its labeling
// so downstream tests are deterministic. All values are immutable after
// construction and safe to share across threads.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace speclim {

// Simple undirected graph: no loops, no multi-edges, endpoints < n.
// Edges are stored normalized (u < v), sorted, duplicate-free.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n_, std::vector<std::pair<int, int>> edges_);

    std::size_t edge_count() const { return edges.size(); }
    bool has_edge(int u, int v) const;
    std::vector<std::vector<int>> adjacency_list() const;
    std::vector<int> degrees() const;
    int max_degree() const;
    bool is_connected() const;
    bool is_tree() const;
};

// Signed graph (G, sigma): signs[i] in {+1,-1} is the sign of base.edges[i].
struct SignedGraph {
    Graph base;
    std::vector<int> signs;

    SignedGraph() = default;
    SignedGraph(Graph base_, std::vector<int> signs_);

    static SignedGraph all_positive(Graph g);
    static SignedGraph all_negative(Graph g);
    int sign_of(int u, int v) const;
};

// Mixed graph: ordered arc set, no self-arcs. A digon is a pair (u,v),(v,u)
// and plays the role of an undirected edge.
struct MixedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted, duplicate-free

    MixedGraph() = default;
    MixedGraph(int n_, std::vector<std::pair<int, int>> arcs_);

    bool has_arc(int u, int v) const;
    bool is_digon(int u, int v) const;
    Graph underlying() const;
    bool is_connected() const;
    static MixedGraph all_digons(const Graph& g);
};

// Oriented graph: simple graph plus a chosen head per edge (no digons by
// construction). heads[i] is one endpoint of base.edges[i]; the edge is
// oriented tail -> head.
struct OrientedGraph {
    Graph base;
    std::vector<int> heads;

    OrientedGraph() = default;
    OrientedGraph(Graph base_, std::vector<int> heads_);

    int head_of(int e) const { return heads[e]; }
    int tail_of(int e) const;
    MixedGraph to_mixed() const;
};

enum class Family {
    path,
    cycle,
    star,
    t_shape,
    h_shape,
    double_snake,
    caterpillar,
    dagger,
    directed_cycle,
    c_tilde,
    c_tilde_prime,
    c_tilde_double_prime,
    box,
};

struct FamilySpec {
    Family family;
    std::vector<long> params;
};

// Caterpillar: spine path of legs.size() vertices; legs[i] pendant vertices
// hang from spine vertex i. Spine is 0..s-1, pendants are appended in spine
// order.
struct Caterpillar {
    std::vector<int> legs;

    int spine() const { return static_cast<int>(legs.size()); }
    int order() const;
    Graph to_graph() const;
};

// Named family constructors. Labelings:
//   path(n):   0-1-...-(n-1)
//   cycle(n):  ring 0..n-1
//   star(m):   K_{1,m}, center 0, leaves 1..m
//   t_shape(a,b,c), 1 <= a <= b <= c: center 0, legs are the paths
//              1..a, a+1..a+b, a+b+1..a+b+c, each starting at the center
//   h_shape(a,b,c), c >= a >= 1, b >= 1: bar 0..b (b edges); vertex 0 carries
//              the pendant leaf b+1 and the leg b+2..b+1+a; vertex b carries
//              the pendant leaf b+a+2 and the leg b+a+3..b+a+2+c
//   double_snake(n), n >= 6: spine 0..n-5; pendants n-4,n-3 at spine vertex 0
//              and n-2,n-1 at spine vertex n-5
//   dagger(k), k >= 0: center 0 with leaves 1,2,3 (the 3-claw) and a path of
//              k further vertices 4..k+3 attached at 0
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph t_shape(int a, int b, int c);
Graph h_shape(int a, int b, int c);
Graph double_snake(int n);
Graph dagger(int tail);
Graph complete_graph(int n);

// Mixed families. directed_cycle(n): arcs i -> i+1 (mod n). c_tilde reverses
// the closing arc, c_tilde_prime turns it into a digon, c_tilde_double_prime
// turns {0,1} into a digon and reverses 1->2. box(a,b,c,d) is a negative
// quadrangle q0..q3 (arcs q0->q1->q2->q3 and q0->q3) with outward directed
// paths of lengths a,b,c,d at q0..q3.
MixedGraph directed_cycle(int n);
MixedGraph c_tilde(int n);
MixedGraph c_tilde_prime(int n);
MixedGraph c_tilde_double_prime(int n);
MixedGraph box_digraph(int a, int b, int c, int d);

using BuiltGraph = std::variant<Graph, MixedGraph>;
BuiltGraph build_family(const FamilySpec& spec);

struct ShapeReport {
    bool path = false;
    bool cycle = false;
    bool caterpillar = false;
    bool open_quipu = false;
    bool closed_quipu = false;
    std::optional<int> star;                      // K_{1,m} -> m
    std::optional<std::array<int, 3>> t_shape;    // sorted a <= b <= c
    std::optional<std::array<int, 3>> h_shape;    // (a,b,c), a <= c
    std::optional<int> double_snake;              // order n
    std::optional<int> dagger;                    // tail length k >= 1
};

ShapeReport recognize_shape(const Graph& g);

int diameter(const Graph& g);

// Disjoint union of g1 and g2 plus the bridge u--v. Vertices of g2 are
// shifted by g1.n.
Graph join_graphs(const Graph& g1, int u, const Graph& g2, int v);

enum class PathAttach { one_path, two_paths };

// G_u(P_len) / G_u(P_len, P_len): pendant paths of len vertices attached at u.
// Path vertices are appended after g's.
Graph compound(const Graph& g, int u, PathAttach kind, int len);

// X and Y joined by a path with n internal vertices (a path of length n+1
// between x and y). Y's vertices are shifted by X.n, internal path vertices
// are appended last.
Graph xy_bridge(const Graph& x_graph, int x, const Graph& y_graph, int y, int n);

// Subdivide edge {u,v}: replace it by u-w-v with a fresh vertex w = n.
Graph subdivide_edge(const Graph& g, int u, int v);

}  // namespace speclim
