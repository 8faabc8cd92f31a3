#include "doctest.h"

#include <cmath>

#include "speclim/charpoly_alpha.hpp"
#include "speclim/graph.hpp"
#include "speclim/limit_points.hpp"
#include "speclim/matrices.hpp"
#include "speclim/spectra.hpp"

using namespace speclim;

namespace {

// Independent oracle: plain bisection for a root of f on [lo,hi].
template <typename F>
double bisect_oracle(F f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("constants") {
    Constants c = constants();
    CHECK(c.tau == doctest::Approx((std::sqrt(5.0) + 1) / 2).epsilon(1e-15));
    CHECK(c.rho1 == doctest::Approx(2.0581710272714924).epsilon(1e-14));
    CHECK(c.rho2 == doctest::Approx(1.5 * std::sqrt(2.0)).epsilon(1e-15));
    // omega is the real root of x^3 = x^2 + x + 1
    CHECK(std::abs(c.omega * c.omega * c.omega - c.omega * c.omega - c.omega - 1.0) < 1e-12);
    CHECK(c.omega == doctest::Approx(1.8392867552141612).epsilon(1e-13));
    CHECK(std::abs(c.epsilon - (c.omega + 1.0 / c.omega)) < 1e-12);
    CHECK(c.epsilon == doctest::Approx(2.3829757679062374).epsilon(1e-12));
    CHECK(c.tau1 == doctest::Approx(2.0 + std::sqrt(5.0)).epsilon(1e-15));
    CHECK(c.tau2 == doctest::Approx(2.0 + c.epsilon).epsilon(1e-15));
}

TEST_CASE("hoffman sequence") {
    LimitReport e1 = hoffman_eta(1);
    CHECK(std::abs(e1.value - 2.0) < 1e-12);
    CHECK(e1.residual < 1e-12);

    // beta_2 is the real root of x^3 - x - 1 (oracle: independent bisection)
    double plastic = bisect_oracle([](double x) { return x * x * x - x - 1.0; }, 1.0, 2.0);
    double want = std::sqrt(plastic) + 1.0 / std::sqrt(plastic);
    CHECK(hoffman_eta(2).value == doctest::Approx(want).epsilon(1e-12));

    Constants c = constants();
    double prev = 0.0;
    for (int n = 1; n <= 8; ++n) {
        double eta = hoffman_eta(n).value;
        CHECK(eta > prev);
        CHECK(eta < c.rho1);
        prev = eta;
    }
    CHECK(std::abs(hoffman_eta(20).value - c.rho1) < 1e-3);
    CHECK_THROWS_AS(hoffman_eta(0), std::invalid_argument);
}

TEST_CASE("guo sequence") {
    CHECK(guo_alpha(0).value == 4.0);
    // beta_1 = tau^2 gives alpha_1 = 2 + sqrt(5)
    CHECK(guo_alpha(1).value == doctest::Approx(2.0 + std::sqrt(5.0)).epsilon(1e-12));
    Constants c = constants();
    double prev = 0.0;
    for (int n = 0; n <= 12; ++n) {
        double a = guo_alpha(n).value;
        CHECK(a > prev);
        CHECK(a < 2.0 + c.epsilon);
        prev = a;
    }
    CHECK(std::abs(guo_alpha(20).value - (2.0 + c.omega + 1.0 / c.omega)) < 1e-2);
}

TEST_CASE("chi_u for the claw") {
    // alpha = 0: the dagger limit (3/2) sqrt(2)
    LimitReport r0 = chi_u(star_graph(3), 0, 0.0);
    CHECK(r0.value == doctest::Approx(1.5 * std::sqrt(2.0)).epsilon(1e-11));
    CHECK(r0.residual < 1e-12);

    // the alpha formula (5a + 3 sqrt(2 - 4a + 3a^2))/2
    for (double a = 0.0; a < 0.95; a += 0.1) {
        double want = (5 * a + 3 * std::sqrt(2 - 4 * a + 3 * a * a)) / 2.0;
        CHECK(chi_u(star_graph(3), 0, a).value == doctest::Approx(want).epsilon(1e-10));
    }

    // degenerate: growing a path from a single vertex gives paths
    LimitReport deg = chi_u(path_graph(1), 0, 0.0);
    CHECK(deg.value == 2.0);
    CHECK(deg.defining_equation == "degenerate");
    CHECK(chi_u(path_graph(4), 0, 0.3).value == 2.0);  // path end stays a path

    // T(1,1,n) has limit 2: no root above 2 exists
    CHECK(chi_u(path_graph(3), 1, 0.0).value == 2.0);

    // T(2,2,n) has a genuine limit: the radius sequence must increase to it
    LimitReport t22 = chi_u(path_graph(5), 2, 0.0);
    CHECK(t22.value > 2.0);
    CHECK(t22.value == doctest::Approx(constants().rho1).epsilon(1e-10));
}

TEST_CASE("chi_u convergence from below") {
    for (double alpha : {0.0, 0.3, 0.6}) {
        double limit = chi_u(star_graph(3), 0, alpha).value;
        double prev_gap = 1e9;
        for (int n : {1, 2, 4, 8, 16, 32, 64, 128, 200}) {
            double rho = spectral_radius(compound(star_graph(3), 0, PathAttach::one_path, n),
                                         Model::Aalpha, alpha);
            double gap = std::abs(rho - limit);
            CHECK(rho < limit + 1e-12);
            CHECK(gap < prev_gap + 1e-11);
            prev_gap = gap;
        }
        CHECK(prev_gap < 1e-4);
    }
}

TEST_CASE("chi2_u") {
    // K_1 with two growing paths is a path
    LimitReport deg = chi2_u(path_graph(1), 0, 0.0);
    CHECK(deg.value == 2.0);

    // K_2 at an end vertex: T(1,n,n) increases to sqrt(2+sqrt(5))
    LimitReport k2 = chi2_u(path_graph(2), 0, 0.0);
    CHECK(k2.value == doctest::Approx(constants().rho1).epsilon(1e-10));
    double rho40 = spectral_radius(compound(path_graph(2), 0, PathAttach::two_paths, 40), Model::A);
    CHECK(rho40 < k2.value);
    CHECK(k2.value - rho40 < 1e-4);

    CHECK(chi2_u(star_graph(3), 0, 0.0).value >= chi_u(star_graph(3), 0, 0.0).value);
    for (double a : {0.2, 0.5}) {
        LimitReport two = chi2_u(star_graph(3), 0, a);
        double rho = spectral_radius(compound(star_graph(3), 0, PathAttach::two_paths, 60),
                                     Model::Aalpha, a);
        CHECK(rho < two.value + 1e-9);
        CHECK(two.value - rho < 1e-4);
    }
}

TEST_CASE("xy_limit") {
    double rho2 = 1.5 * std::sqrt(2.0);
    CHECK(xy_limit(star_graph(3), 0, star_graph(3), 0, 0.0).value ==
          doctest::Approx(rho2).epsilon(1e-11));
    CHECK(xy_limit(star_graph(3), 0, path_graph(1), 0, 0.0).value ==
          doctest::Approx(rho2).epsilon(1e-11));
    CHECK(xy_limit(path_graph(1), 0, path_graph(1), 0, 0.0).value == 2.0);

    // eigensolver approach along the bridge, n up to 60: the bridge is an
    // internal path here, so the radii decrease toward the limit from above
    double limit = xy_limit(star_graph(3), 0, star_graph(3), 0, 0.0).value;
    double prev_gap = 1e9;
    for (int n : {1, 5, 15, 40, 60}) {
        double rho = spectral_radius(xy_bridge(star_graph(3), 0, star_graph(3), 0, n), Model::A);
        double gap = std::abs(rho - limit);
        CHECK(rho > limit - 1e-9);
        CHECK(gap < prev_gap + 1e-12);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-6);

    for (double a : {0.0, 0.4}) {
        double one_sided = chi_u(star_graph(3), 0, a).value;
        CHECK(xy_limit(star_graph(3), 0, path_graph(2), 1, a).value ==
              doctest::Approx(one_sided).epsilon(1e-12));
    }
}

TEST_CASE("limit reports bracket their value") {
    for (const LimitReport& r :
         {hoffman_eta(1), hoffman_eta(7), guo_alpha(0), guo_alpha(5),
          chi_u(star_graph(3), 0, 0.4), chi_u(path_graph(1), 0, 0.0),
          chi2_u(path_graph(2), 0, 0.2)}) {
        CHECK(r.lo < r.value);
        CHECK(r.value < r.hi);
        CHECK(r.residual < 1e-12);
    }
}

TEST_CASE("aalpha thresholds") {
    AalphaThresholds t = aalpha_thresholds(8);
    CHECK(t.s2 > 0.219);
    CHECK(t.s2 < 0.220);
    CHECK(t.s3 > 0.120);
    CHECK(t.s3 < 0.121);
    CHECK(t.s4 > 0.051);
    CHECK(t.s4 < 0.052);
    // each is a root of its cubic
    auto cube = [](double a, double c3, double c2, double c1, double c0) {
        return ((c3 * a + c2) * a + c1) * a + c0;
    };
    CHECK(std::abs(cube(t.s2, 2, -11, 16, -3)) < 1e-12);
    CHECK(std::abs(cube(t.s3, 1, -6, 9, -1)) < 1e-12);
    CHECK(std::abs(cube(t.s4, 2, -13, 20, -1)) < 1e-12);
    // s2 = (5 - sqrt(17))/4 exactly (the cubic factors through alpha = 3)
    CHECK(t.s2 == doctest::Approx((5.0 - std::sqrt(17.0)) / 4.0).epsilon(1e-14));

    // s1(4) = 1/2 makes K_{1,3} hit radius 2 (Q-index 4)
    CHECK(aalpha_thresholds(4).s1 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(aalpha_thresholds(3), std::invalid_argument);
}

TEST_CASE("threshold consistency against the spectrum") {
    AalphaThresholds t = aalpha_thresholds(4);
    struct Row {
        Graph g;
        double s;
    };
    std::vector<Row> rows;
    rows.push_back({t_shape(1, 2, 2), t.s2});
    rows.push_back({t_shape(1, 2, 3), t.s3});
    rows.push_back({t_shape(1, 2, 4), t.s4});
    for (const auto& row : rows) {
        CHECK(std::abs(spectral_radius(row.g, Model::Aalpha, row.s) - 2.0) < 1e-8);
        CHECK(spectral_radius(row.g, Model::Aalpha, row.s - 0.01) < 2.0);
        CHECK(spectral_radius(row.g, Model::Aalpha, row.s + 0.01) > 2.0);
    }
    for (int n = 5; n <= 10; ++n) {
        double s1 = aalpha_thresholds(n).s1;
        Graph g = t_shape(1, 1, n - 3);
        CHECK(std::abs(spectral_radius(g, Model::Aalpha, s1) - 2.0) < 1e-8);
        CHECK(spectral_radius(g, Model::Aalpha, s1 - 0.01) < 2.0);
        CHECK(spectral_radius(g, Model::Aalpha, s1 + 0.01) > 2.0);
    }
}

TEST_CASE("shearer approach") {
    CHECK_THROWS_AS(shearer_approach(2.0, 10), std::invalid_argument);
    auto seq = shearer_approach(2.2, 30);
    REQUIRE(seq.size() == 30);
    double prev = -1.0;
    int prev_order = 0;
    for (const auto& step : seq) {
        CHECK(step.radius > prev);
        CHECK(step.radius <= 2.2 + 1e-12);
        CHECK(step.caterpillar.order() > prev_order);
        prev = step.radius;
        prev_order = step.caterpillar.order();
    }
    CHECK(2.2 - seq.back().radius < 0.01);

    // nested: each caterpillar extends the previous one
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const auto& a = seq[i - 1].caterpillar.legs;
        const auto& b = seq[i].caterpillar.legs;
        REQUIRE(b.size() == a.size() + 1);
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(b[k] >= a[k]);
    }

    // at the smallest admissible target the radii stay below it
    auto low = shearer_approach(constants().rho1, 25);
    for (const auto& step : low) CHECK(step.radius <= constants().rho1 + 1e-12);

    // the same nested caterpillars carry any signature to the signed radius:
    // forests are switching equivalent, so the all-positive choice is enough
    for (const auto& step : seq) {
        Graph g = step.caterpillar.to_graph();
        CHECK(spectral_radius(SignedGraph::all_positive(g)) ==
              doctest::Approx(step.radius).epsilon(1e-12));
    }
}
