#include "doctest.h"

#include <cmath>
#include <random>

#include "speclim/graph.hpp"
#include "speclim/matrices.hpp"
#include "speclim/spectra.hpp"

using namespace speclim;

namespace {

Graph random_connected(std::mt19937_64& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v)
        es.emplace_back(static_cast<int>(rng() % static_cast<unsigned long>(v)), v);
    for (int k = 0; k < extra_edges; ++k) {
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

}  // namespace

TEST_CASE("closed-form spectra") {
    for (int n : {3, 5, 8}) {
        Spectrum sp = eigenvalues(adjacency(cycle_graph(n)));
        CHECK(sp.radius == doctest::Approx(2.0).epsilon(1e-12));
        // 2 cos(2 pi k / n) are all present
        for (int k = 0; k < n; ++k) {
            double want = 2.0 * std::cos(2.0 * M_PI * k / n);
            bool found = false;
            for (double x : sp.eigenvalues)
                if (std::abs(x - want) < 1e-9) found = true;
            CHECK(found);
        }
    }

    Spectrum k14 = eigenvalues(adjacency(star_graph(4)));
    CHECK(k14.eigenvalues.front() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(k14.eigenvalues.back() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(k14.eigenvalues[1]) < 1e-12);

    CHECK(spectral_radius(cycle_graph(7), Model::Q) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(spectral_radius(star_graph(3), Model::Q) == doctest::Approx(4.0).epsilon(1e-12));

    // rho_A(P_4) = (1+sqrt(5))/2, the largest root of x^4 - 3x^2 + 1
    CHECK(spectral_radius(path_graph(4), Model::A) ==
          doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    CHECK(spectral_radius(double_snake(6), Model::A) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spectral_radius(path_graph(7), Model::A) ==
          doctest::Approx(2.0 * std::cos(M_PI / 8.0)).epsilon(1e-12));
}

TEST_CASE("eigenvalues input contract") {
    DenseMatrix bad(2, MatrixSymmetry::general, true);
    CHECK_THROWS_AS(eigenvalues(bad), std::invalid_argument);

    DenseMatrix asym(2, MatrixSymmetry::symmetric, true);
    asym.at(0, 1) = 1.0;
    CHECK_THROWS_AS(eigenvalues(asym), std::invalid_argument);

    DenseMatrix inf(1, MatrixSymmetry::symmetric, true);
    inf.at(0, 0) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(eigenvalues(inf), std::invalid_argument);
}

TEST_CASE("charpoly_eval") {
    CHECK(charpoly_eval(adjacency(path_graph(2)), 2.0) == doctest::Approx(3.0).epsilon(1e-12));

    // sign flips across each simple eigenvalue of A(P_3): {-sqrt2, 0, sqrt2}
    DenseMatrix m = adjacency(path_graph(3));
    double s2 = std::sqrt(2.0);
    CHECK(charpoly_eval(m, -2.0) < 0.0);
    CHECK(charpoly_eval(m, -1.0) > 0.0);
    CHECK(charpoly_eval(m, -0.5) > 0.0);
    CHECK(charpoly_eval(m, 0.5) < 0.0);
    CHECK(charpoly_eval(m, (s2 + 0.1)) > 0.0);
    // relative accuracy away from roots: det(3I - A(P_3)) = 27 - 6 = 21
    CHECK(charpoly_eval(m, 3.0) == doctest::Approx(21.0).epsilon(1e-10));
}

TEST_CASE("subgraph and alpha monotonicity") {
    std::mt19937_64 rng(101);
    int done = 0;
    while (done < 200) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_connected(rng, n, static_cast<int>(rng() % 3));
        // proper connected subgraph: drop one edge if that keeps it connected
        std::size_t k = rng() % g.edges.size();
        std::vector<std::pair<int, int>> es;
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            if (e != k) es.push_back(g.edges[e]);
        Graph h(n, es);
        if (!h.is_connected()) continue;
        double alpha = (rng() % 100) / 100.0 * 0.99;
        CHECK(spectral_radius(h, Model::Aalpha, alpha) <
              spectral_radius(g, Model::Aalpha, alpha) + 1e-12);
        ++done;
    }

    // alpha monotonicity on connected graphs
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = random_connected(rng, 5 + static_cast<int>(rng() % 4), 2);
        double a = (rng() % 50) / 100.0;
        double b = a + 0.25;
        CHECK(spectral_radius(g, Model::Aalpha, a) < spectral_radius(g, Model::Aalpha, b) + 1e-12);
    }
}

TEST_CASE("degree bounds on the A_alpha radius") {
    std::mt19937_64 rng(103);
    for (int rep = 0; rep < 40; ++rep) {
        Graph g = random_connected(rng, 4 + static_cast<int>(rng() % 5), 2);
        double delta = g.max_degree();
        for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            double rho = spectral_radius(g, Model::Aalpha, alpha);
            double lower = 0.5 * (alpha * (delta + 1) +
                                  std::sqrt(alpha * alpha * (delta + 1) * (delta + 1) +
                                            4 * delta * (1 - 2 * alpha)));
            CHECK(rho >= lower - 1e-9);
            CHECK(rho <= delta + 1e-9);
        }
    }
}

TEST_CASE("regular graphs have A_alpha radius equal to the degree") {
    for (int n : {3, 5, 8})
        for (double alpha : {0.0, 0.3, 0.7, 1.0})
            CHECK(spectral_radius(cycle_graph(n), Model::Aalpha, alpha) ==
                  doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("internal path subdivision") {
    // K_4: every edge lies on an internal path; subdividing lowers the radius
    Graph k4 = complete_graph(4);
    CHECK(spectral_radius(subdivide_edge(k4, 0, 1), Model::A) <
          spectral_radius(k4, Model::A));

    // dumbbell: two triangles joined by a bridge; the bridge is internal
    Graph dumbbell(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(spectral_radius(subdivide_edge(dumbbell, 2, 3), Model::A) <
          spectral_radius(dumbbell, Model::A));
    for (double alpha : {0.2, 0.6})
        CHECK(spectral_radius(subdivide_edge(dumbbell, 2, 3), Model::Aalpha, alpha) <
              spectral_radius(dumbbell, Model::Aalpha, alpha));

    // a leg edge of T(1,1,5) is not internal; subdividing raises the radius
    Graph t = t_shape(1, 1, 5);
    // vertex labels: leg of length 5 is 3..7, its last edge is {6,7}
    CHECK(spectral_radius(subdivide_edge(t, 6, 7), Model::A) > spectral_radius(t, Model::A));

    // the excluded cases: cycles at any alpha, W_n at alpha = 0
    CHECK(spectral_radius(subdivide_edge(cycle_graph(5), 0, 1), Model::Aalpha, 0.4) ==
          doctest::Approx(spectral_radius(cycle_graph(5), Model::Aalpha, 0.4)).epsilon(1e-12));
    Graph w8 = double_snake(8);
    // spine edge {1,2} lies on the internal path of W_8
    CHECK(spectral_radius(subdivide_edge(w8, 1, 2), Model::A) ==
          doctest::Approx(spectral_radius(w8, Model::A)).epsilon(1e-10));
}

TEST_CASE("path radius bounds in alpha") {
    for (int n = 1; n <= 30; ++n) {
        Graph p = path_graph(n);
        for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            double rho = spectral_radius(p, Model::Aalpha, alpha);
            double upper, lower;
            if (alpha < 0.5)
                upper = 2 * alpha + 2 * (1 - alpha) * std::cos(M_PI / (n + 1));
            else
                upper = 2 * alpha + 2 * (1 - alpha) * std::cos(M_PI / n);
            if (alpha < 0.5)
                lower = 2 * alpha + 2 * (1 - alpha) * std::cos(M_PI / n);
            else
                lower = 2 * alpha + 2 * alpha * std::cos(M_PI / n) -
                        2 * (2 * alpha - 1) * std::cos(M_PI / (n + 1));
            if (n == 1) {
                // a single vertex has radius 0; the display bounds start at P_2
                CHECK(rho == 0.0);
                continue;
            }
            CHECK(rho <= upper + 1e-10);
            CHECK(rho >= lower - 1e-10);
        }
    }
}
