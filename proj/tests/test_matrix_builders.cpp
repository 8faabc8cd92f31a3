#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "speclim/graph.hpp"
#include "speclim/matrices.hpp"
#include "speclim/spectra.hpp"

using namespace speclim;

namespace {

Graph random_connected(std::mt19937_64& rng, int n) {
    // random tree plus a few extra edges
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v)
        es.emplace_back(static_cast<int>(rng() % static_cast<unsigned long>(v)), v);
    int extra = static_cast<int>(rng() % 3);
    for (int k = 0; k < extra; ++k) {
        int u = static_cast<int>(rng() % static_cast<unsigned long>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned long>(n));
        if (u == v) continue;
        auto e = std::minmax(u, v);
        bool dup = false;
        for (auto [a, b] : es)
            if (a == e.first && b == e.second) dup = true;
        if (!dup) es.emplace_back(e.first, e.second);
    }
    return Graph(n, es);
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.eigenvalues.size() != b.eigenvalues.size()) return false;
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
        if (std::abs(a.eigenvalues[i] - b.eigenvalues[i]) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("a_alpha endpoints") {
    Graph k2 = path_graph(2);
    DenseMatrix a0 = a_alpha(k2, 0.0);
    CHECK(a0.at(0, 1).real() == 1.0);
    CHECK(a0.at(0, 0).real() == 0.0);

    // 2 A_{1/2} = Q
    DenseMatrix ah = a_alpha(k2, 0.5);
    DenseMatrix q = signless_laplacian(k2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(2.0 * ah.at(i, j).real() == doctest::Approx(q.at(i, j).real()).epsilon(1e-15));
    CHECK(ah.at(0, 0).real() == 0.5);
    CHECK(ah.at(0, 1).real() == 0.5);

    // L rows sum to zero
    DenseMatrix l = laplacian(path_graph(3));
    for (int i = 0; i < 3; ++i) {
        double s = 0;
        for (int j = 0; j < 3; ++j) s += l.at(i, j).real();
        CHECK(std::abs(s) < 1e-15);
    }

    CHECK_THROWS_AS(a_alpha(k2, 1.5), std::invalid_argument);
}

TEST_CASE("a_alpha is affine in alpha: A_a - A_b = (a-b) L") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = random_connected(rng, 6);
        double a = 0.3, b = 0.8;
        DenseMatrix ma = a_alpha(g, a), mb = a_alpha(g, b), l = laplacian(g);
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                CHECK(std::abs(ma.at(i, j).real() - mb.at(i, j).real() -
                               (a - b) * l.at(i, j).real()) < 1e-14);
    }
}

TEST_CASE("signed adjacency spectra") {
    Graph c3 = cycle_graph(3);
    Spectrum neg = eigenvalues(signed_adjacency(SignedGraph::all_negative(c3)));
    CHECK(neg.eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(neg.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(neg.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-12));

    Spectrum pos = eigenvalues(signed_adjacency(SignedGraph::all_positive(c3)));
    CHECK(pos.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-12));

    // any signature on a tree is switching equivalent to the all-positive one
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        Graph t = t_shape(1 + static_cast<int>(rng() % 2), 2, 2 + static_cast<int>(rng() % 3));
        std::vector<int> signs;
        for (std::size_t e = 0; e < t.edges.size(); ++e) signs.push_back(rng() % 2 ? 1 : -1);
        Spectrum s1 = eigenvalues(signed_adjacency(SignedGraph(t, signs)));
        Spectrum s2 = eigenvalues(adjacency(t));
        CHECK(spectra_equal(s1, s2, 1e-10));
    }
}

TEST_CASE("hermitian adjacency") {
    // all-digon path equals the plain adjacency matrix
    MixedGraph p3 = MixedGraph::all_digons(path_graph(3));
    DenseMatrix h = hermitian_adjacency(p3);
    DenseMatrix a = adjacency(path_graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(h.at(i, j) == a.at(i, j));

    // directed cycles: eigenvalues -2 sin(2 pi k / n)
    CHECK(spectral_radius(directed_cycle(4)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spectral_radius(directed_cycle(3)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    DenseMatrix hd = hermitian_adjacency(directed_cycle(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(hd.at(i, j) == std::conj(hd.at(j, i)));
}

TEST_CASE("skew adjacency") {
    OrientedGraph k2(path_graph(2), {1});  // edge 0 -> 1
    DenseMatrix s = skew_adjacency(k2);
    CHECK(s.at(0, 1).real() == -1.0);
    CHECK(s.at(1, 0).real() == 1.0);
    Spectrum sp = eigenvalues(s);
    CHECK(sp.radius == doctest::Approx(1.0).epsilon(1e-12));

    // oriented trees: rho_S = rho_A whatever the orientation
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        int b = 1 + static_cast<int>(rng() % 3);
        Graph t = t_shape(1, b, b + static_cast<int>(rng() % 3));
        std::vector<int> heads;
        for (auto [u, v] : t.edges) heads.push_back(rng() % 2 ? u : v);
        OrientedGraph og(t, heads);
        CHECK(spectral_radius(og) ==
              doctest::Approx(spectral_radius(t, Model::A)).epsilon(1e-10));
        DenseMatrix m = skew_adjacency(og);
        for (int i = 0; i < t.n; ++i)
            for (int j = 0; j < t.n; ++j) CHECK(m.at(i, j) == -m.at(j, i));
    }

    OrientedGraph k13(star_graph(3), {1, 2, 3});
    CHECK(spectral_radius(k13) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("signed switching preserves the spectrum") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_connected(rng, n);
        std::vector<int> signs;
        for (std::size_t e = 0; e < g.edges.size(); ++e) signs.push_back(rng() % 2 ? 1 : -1);
        SignedGraph sg(g, signs);
        std::vector<int> cut(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) cut[static_cast<std::size_t>(v)] = rng() % 2;
        SignedGraph switched = switch_signed(sg, cut);
        CHECK(spectra_equal(eigenvalues(signed_adjacency(sg)),
                            eigenvalues(signed_adjacency(switched)), 1e-10));
    }

    // switching a single vertex of (C_3, sigma-) leaves one negative edge
    SignedGraph neg = SignedGraph::all_negative(cycle_graph(3));
    SignedGraph sw = switch_signed(neg, {1, 0, 0});
    int negatives = 0;
    for (int s : sw.signs) negatives += (s < 0);
    CHECK(negatives == 1);
    CHECK(spectra_equal(eigenvalues(signed_adjacency(neg)), eigenvalues(signed_adjacency(sw)),
                        1e-12));
}

TEST_CASE("converse and four-way switching") {
    MixedGraph d6 = directed_cycle(6);
    MixedGraph conv = converse(d6);
    CHECK(conv.has_arc(1, 0));
    CHECK(spectra_equal(eigenvalues(hermitian_adjacency(d6)),
                        eigenvalues(hermitian_adjacency(conv)), 1e-12));

    // identity partition: everything in V_1
    FourWayPartition id;
    id.cls.assign(6, FourWayPartition::v_plus1);
    MixedGraph same = four_way_switch(d6, id);
    CHECK(same.arcs == d6.arcs);

    // a digon crossing V_1 / V_-1 violates (a)
    MixedGraph digon(2, {{0, 1}, {1, 0}});
    FourWayPartition bad;
    bad.cls = {FourWayPartition::v_plus1, FourWayPartition::v_minus1};
    CHECK_THROWS_WITH_AS(four_way_switch(digon, bad),
                         doctest::Contains("condition (a)"), std::runtime_error);

    // a lone arc from V_1 to V_i violates (b)
    MixedGraph lone(2, {{0, 1}});
    FourWayPartition bad2;
    bad2.cls = {FourWayPartition::v_plus1, FourWayPartition::v_plusi};
    CHECK_THROWS_WITH_AS(four_way_switch(lone, bad2),
                         doctest::Contains("condition (b)"), std::runtime_error);

    // admissible partitions preserve the spectrum (randomized)
    std::mt19937_64 rng(19);
    int done = 0;
    while (done < 25) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = random_connected(rng, n);
        std::vector<std::pair<int, int>> arcs;
        for (auto [u, v] : g.edges) {
            int kind = static_cast<int>(rng() % 3);
            if (kind == 0) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            } else if (kind == 1) {
                arcs.emplace_back(u, v);
            } else {
                arcs.emplace_back(v, u);
            }
        }
        MixedGraph mg(n, arcs);
        FourWayPartition p;
        p.cls.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) p.cls[static_cast<std::size_t>(v)] = static_cast<int>(rng() % 4);
        try {
            validate_partition(mg, p);
        } catch (const std::runtime_error&) {
            continue;
        }
        MixedGraph switched = four_way_switch(mg, p);
        CHECK(spectra_equal(eigenvalues(hermitian_adjacency(mg)),
                            eigenvalues(hermitian_adjacency(switched)), 1e-10));
        ++done;
    }
}

TEST_CASE("oriented switching preserves the spectrum") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_connected(rng, n);
        std::vector<int> heads;
        for (auto [u, v] : g.edges) heads.push_back(rng() % 2 ? u : v);
        OrientedGraph og(g, heads);
        std::vector<int> cut(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) cut[static_cast<std::size_t>(v)] = rng() % 2;
        OrientedGraph switched = switch_oriented(og, cut);
        CHECK(spectra_equal(eigenvalues(skew_adjacency(og)),
                            eigenvalues(skew_adjacency(switched)), 1e-10));
    }
}

TEST_CASE("bipartite double") {
    // Kronecker identity S(bd(G)) = S(G) (x) A(K_2), with copies 2i, 2i+1
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_connected(rng, n);
        std::vector<int> heads;
        for (auto [u, v] : g.edges) heads.push_back(rng() % 2 ? u : v);
        OrientedGraph og(g, heads);
        DenseMatrix s = skew_adjacency(og);
        OrientedGraph bd = bipartite_double(og);
        DenseMatrix sbd = skew_adjacency(bd);
        REQUIRE(sbd.n == 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        double want = (k != l) ? s.at(i, j).real() : 0.0;
                        CHECK(sbd.at(2 * i + k, 2 * j + l).real() == want);
                    }

        // each skew eigenvalue is doubled in the double
        Spectrum sp = eigenvalues(s), spd = eigenvalues(sbd);
        for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i) {
            CHECK(spd.eigenvalues[2 * i] == doctest::Approx(sp.eigenvalues[i]).epsilon(1e-9));
            CHECK(spd.eigenvalues[2 * i + 1] == doctest::Approx(sp.eigenvalues[i]).epsilon(1e-9));
        }
    }

    // bd of an odd oriented cycle is connected; sorted edges of C_5 are
    // (0,1),(0,4),(1,2),(2,3),(3,4)
    OrientedGraph c5(cycle_graph(5), {1, 0, 2, 3, 4});
    CHECK(bipartite_double(c5).base.is_connected());
    // bd of an even (bipartite) cycle is not
    OrientedGraph c4(cycle_graph(4), {1, 0, 2, 3});
    CHECK_FALSE(bipartite_double(c4).base.is_connected());
}

namespace {

// Signature associated to an orientation of a bipartite graph: with parts
// (A, B), sigma(ab) = +1 iff the edge is oriented a -> b for a in A. This
// satisfies sigma(ik) sigma(jk) = s_ik s_jk on adjacent edges.
std::vector<int> associated_signature(const OrientedGraph& og, const std::vector<int>& side) {
    std::vector<int> signs;
    for (std::size_t e = 0; e < og.base.edges.size(); ++e) {
        auto [u, v] = og.base.edges[e];
        int a = side[static_cast<std::size_t>(u)] == 0 ? u : v;
        signs.push_back(og.heads[e] != a ? 1 : -1);
    }
    return signs;
}

std::vector<int> bipartition(const Graph& g) {
    auto adj = g.adjacency_list();
    std::vector<int> side(static_cast<std::size_t>(g.n), -1);
    for (int s = 0; s < g.n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                }
        }
    }
    return side;
}

}  // namespace

TEST_CASE("skew and signed spectra of bipartite oriented graphs correspond") {
    // the associated signature turns Sp_S = {±i l_k} into Sp_S-signed = {± l_k}
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph t = random_connected(rng, n);
        // keep it bipartite: trees always are; skip graphs with odd cycles
        auto side = bipartition(t);
        bool bip = true;
        for (auto [u, v] : t.edges)
            if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) bip = false;
        if (!bip) continue;
        std::vector<int> heads;
        for (auto [u, v] : t.edges) heads.push_back(rng() % 2 ? u : v);
        OrientedGraph og(t, heads);
        std::vector<int> signs = associated_signature(og, side);

        // the defining relation on pairs of adjacent edges
        DenseMatrix s = skew_adjacency(og);
        SignedGraph sg(t, signs);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (!t.has_edge(i, k) || !t.has_edge(j, k)) continue;
                    double lhs = sg.sign_of(i, k) * sg.sign_of(j, k);
                    double rhs = s.at(i, k).real() * s.at(j, k).real();
                    CHECK(lhs == rhs);
                }

        Spectrum skew = eigenvalues(s);                    // the ± l list via i*S
        Spectrum sig = eigenvalues(signed_adjacency(sg));  // the ± l list directly
        CHECK(spectra_equal(skew, sig, 1e-10));
    }
}

TEST_CASE("bipartite double spectra against the associated signature") {
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_connected(rng, n);
        std::vector<int> heads;
        for (auto [u, v] : g.edges) heads.push_back(rng() % 2 ? u : v);
        OrientedGraph og(g, heads);
        OrientedGraph bd = bipartite_double(og);
        // bd is bipartite by construction: copies 2i and 2i+1 form the parts
        std::vector<int> side(static_cast<std::size_t>(bd.base.n));
        for (int v = 0; v < bd.base.n; ++v) side[static_cast<std::size_t>(v)] = v % 2;
        SignedGraph sg(bd.base, associated_signature(bd, side));
        Spectrum doubled = eigenvalues(signed_adjacency(sg));
        Spectrum base = eigenvalues(skew_adjacency(og));  // ± l list of the original
        REQUIRE(doubled.eigenvalues.size() == 2 * base.eigenvalues.size());
        for (std::size_t i = 0; i < base.eigenvalues.size(); ++i) {
            CHECK(doubled.eigenvalues[2 * i] ==
                  doctest::Approx(base.eigenvalues[i]).epsilon(1e-9));
            CHECK(doubled.eigenvalues[2 * i + 1] ==
                  doctest::Approx(base.eigenvalues[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("smallest limit points of the signed and Hermitian radii") {
    // paths drive both radii to 2 from below whatever the decoration
    std::mt19937_64 rng(61);
    double prev_s = 0.0, prev_h = 0.0;
    for (int n = 2; n <= 24; ++n) {
        Graph p = path_graph(n);
        std::vector<int> signs;
        for (std::size_t e = 0; e + 1 < static_cast<std::size_t>(n); ++e)
            signs.push_back(rng() % 2 ? 1 : -1);
        double rs = spectral_radius(SignedGraph(p, signs));
        CHECK(rs < 2.0);
        CHECK(rs > prev_s);
        prev_s = rs;

        std::vector<std::pair<int, int>> arcs;
        for (auto [u, v] : p.edges) {
            int kind = static_cast<int>(rng() % 3);
            if (kind == 0) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            } else if (kind == 1) {
                arcs.emplace_back(u, v);
            } else {
                arcs.emplace_back(v, u);
            }
        }
        double rh = spectral_radius(MixedGraph(n, arcs));
        CHECK(rh < 2.0);
        CHECK(rh > prev_h);
        prev_h = rh;
    }
    CHECK(2.0 - prev_s < 2e-2);
    CHECK(2.0 - prev_h < 2e-2);
}

TEST_CASE("mixed cycle spectra match the gain closed form") {
    // a mixed cycle whose arc phases multiply to i^j has eigenvalues
    // 2 cos((j pi/2 + 2 pi k)/n); the four named families carry
    // j = n, n-2, n-1, n+1
    struct Fam {
        MixedGraph (*build)(int);
        int offset;
    };
    for (Fam fam : {Fam{directed_cycle, 0}, Fam{c_tilde, -2}, Fam{c_tilde_prime, -1},
                    Fam{c_tilde_double_prime, 1}}) {
        for (int n = 3; n <= 10; ++n) {
            Spectrum sp = eigenvalues(hermitian_adjacency(fam.build(n)));
            std::vector<double> want;
            double theta = (n + fam.offset) * M_PI / 2.0;
            for (int k = 0; k < n; ++k) want.push_back(2.0 * std::cos((theta + 2 * M_PI * k) / n));
            std::sort(want.begin(), want.end());
            REQUIRE(sp.eigenvalues.size() == want.size());
            for (std::size_t i = 0; i < want.size(); ++i)
                CHECK(sp.eigenvalues[i] == doctest::Approx(want[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("matrix json export") {
    std::string j = matrix_to_json(adjacency(path_graph(2)));
    CHECK(j == "{\"n\":2,\"symmetry\":\"symmetric\",\"all_real\":true,"
               "\"entries\":[[0,0],[1,0],[1,0],[0,0]]}");
}
