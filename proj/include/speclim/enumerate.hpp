// enumerate.hpp — isomorph-free enumeration of small connected graphs and
// trees, plus the theorem-verification sweeps used as the ground-truth
// oracle.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "speclim/graph.hpp"

namespace speclim {

// Bitmask graph used by the enumeration core (n <= 16).
struct BitGraph {
    int n = 0;
    std::array<std::uint16_t, 16> adj{};

    bool edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    void add_edge(int u, int v) {
        adj[u] |= static_cast<std::uint16_t>(1u << v);
        adj[v] |= static_cast<std::uint16_t>(1u << u);
    }
    Graph to_graph() const;
    static BitGraph from_graph(const Graph& g);
};

using GraphCode = unsigned __int128;

// Canonical form: the lexicographically largest upper-triangular column
// encoding over vertex orderings compatible with the iterated
// degree/neighborhood refinement. Equal codes <=> isomorphic graphs.
GraphCode canonical_code(const BitGraph& g);
BitGraph decode_graph(GraphCode code, int n);

// Exactly one representative per isomorphism class, deterministic order.
// Connected graphs need n <= 9, trees n <= 14 (desk scale).
std::vector<Graph> enumerate_connected(int n);
std::vector<Graph> enumerate_trees(int n);

// Connected graphs on <= nmax vertices with adjacency spectral radius below
// rho_cap (a hereditary family, generated level by level).
std::vector<Graph> enumerate_radius_below(int nmax, double rho_cap);

struct Mismatch {
    std::string graph;     // edge-list text of the offending graph
    std::string expected;  // what the theorem's lists predict
    std::string observed;  // what the spectrum says
};

struct VerificationReport {
    std::string theorem_id;
    int n_max = 0;
    long graphs_checked = 0;
    std::vector<Mismatch> mismatches;

    bool pass() const { return mismatches.empty(); }
};

// Known theorem ids: A_lt2, A_eq2, A_interval, Q_lt4, Q_eq4, L_lt4, L_eq4,
// LQ_bipartite, Aalpha2, quipu_shape, quipu_diameter.
// threads = 0 picks SPECLIM_THREADS or the hardware count.
VerificationReport verify_theorem(const std::string& theorem_id, int n_max, int threads = 0);

std::vector<std::string> known_theorem_ids();

// Worker-pool helper shared by the sweeps: runs fn(i) for i in [0, count).
void parallel_for(long count, int threads, const std::function<void(long)>& fn);
int resolve_thread_count(int requested);

}  // namespace speclim
