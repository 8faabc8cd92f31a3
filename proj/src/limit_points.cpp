#include "speclim/limit_points.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "speclim/charpoly_alpha.hpp"
#include "speclim/matrices.hpp"
#include "speclim/spectra.hpp"

namespace speclim {

namespace {

struct RootResult {
    double value;
    double lo, hi;
    int iterations;
};

// Bracketed bisection to ~1e-13 followed by a few Newton polish steps kept
// inside the bracket.
RootResult bisect_newton(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return {lo, lo, hi, 0};
    if (fhi == 0.0) return {hi, lo, hi, 0};
    if ((flo > 0) == (fhi > 0)) throw std::domain_error("root finding: bracket does not straddle a root");
    int it = 0;
    double a = lo, b = hi, fa = flo;
    while (b - a > 1e-13 && it < 200) {
        double mid = 0.5 * (a + b);
        double fm = f(mid);
        ++it;
        if (fm == 0.0) {
            a = b = mid;
            break;
        }
        if ((fm > 0) == (fa > 0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    double x = 0.5 * (a + b);
    for (int k = 0; k < 4; ++k) {
        double fx = f(x);
        double step = std::max(1e-9, 1e-7 * std::abs(x));
        double d = (f(x + step) - f(x - step)) / (2.0 * step);
        if (d == 0.0) break;
        double nx = x - fx / d;
        if (nx <= lo || nx >= hi || !std::isfinite(nx)) break;
        x = nx;
        ++it;
    }
    // keep the reported bracket strictly around the polished value
    double pad = std::max(1e-15, 1e-15 * std::abs(x));
    return {x, std::min(a, x - pad), std::max(b, x + pad), it};
}

// bracket (lo, hi) for a value obtained by transforming a root bracket
void set_bracket(LimitReport& rep, double value, double end1, double end2) {
    double lo = std::min(end1, end2), hi = std::max(end1, end2);
    double pad = std::max(1e-15, 1e-15 * std::abs(value));
    rep.lo = std::min(lo, value - pad);
    rep.hi = std::max(hi, value + pad);
}

// Largest root: scan downward from hi until the sign differs from the value
// at hi, then bisect. Guards against picking an interior root.
RootResult largest_root_below(const std::function<double(double)>& f, double lo, double hi,
                              double step) {
    double fhi = f(hi);
    if (fhi == 0.0) return {hi, hi, hi, 0};
    double x = hi;
    while (x - step > lo) {
        double nx = x - step;
        double fx = f(nx);
        if (fx == 0.0 || (fx > 0) != (fhi > 0)) {
            auto r = bisect_newton(f, nx, x);
            return r;
        }
        x = nx;
    }
    double flo = f(lo);
    if (flo == 0.0 || (flo > 0) != (fhi > 0)) return bisect_newton(f, lo, x);
    throw std::domain_error("root finding: no sign change in scan range");
}

double geometric_sum(double x, int terms) {
    // 1 + x + ... + x^{terms-1}
    double s = 0.0, pw = 1.0;
    for (int k = 0; k < terms; ++k) {
        s += pw;
        pw *= x;
    }
    return s;
}

}  // namespace

LimitReport hoffman_eta(int n) {
    if (n < 1) throw std::invalid_argument("hoffman_eta: need n >= 1");
    auto f = [n](double x) { return std::pow(x, n + 1) - geometric_sum(x, n); };
    auto root = bisect_newton(f, 0.5, 2.0);
    LimitReport rep;
    rep.defining_equation = "x^{n+1} - (1+x+...+x^{n-1}) = 0, eta = sqrt(beta) + 1/sqrt(beta)";
    rep.iterations = root.iterations;
    double beta = root.value;
    auto eta = [](double b) { return std::sqrt(b) + 1.0 / std::sqrt(b); };
    rep.value = eta(beta);
    set_bracket(rep, rep.value, eta(root.lo), eta(root.hi));
    rep.residual = std::abs(f(beta));
    return rep;
}

LimitReport guo_alpha(int n) {
    if (n < 0) throw std::invalid_argument("guo_alpha: need n >= 0");
    LimitReport rep;
    rep.defining_equation =
        "x^{n+1} - (1+x+...+x^{n-1})(sqrt(x)+1)^2 = 0, alpha = 2 + sqrt(beta) + 1/sqrt(beta)";
    if (n == 0) {
        rep.value = 4.0;  // beta_0 = 1 by definition
        set_bracket(rep, 4.0, 4.0, 4.0);
        rep.residual = 0.0;
        return rep;
    }
    auto f = [n](double x) {
        double q = std::sqrt(x) + 1.0;
        return std::pow(x, n + 1) - geometric_sum(x, n) * q * q;
    };
    auto root = largest_root_below(f, 1.0, 8.0, 2e-3);
    rep.iterations = root.iterations;
    double beta = root.value;
    auto alpha_of = [](double b) { return 2.0 + std::sqrt(b) + 1.0 / std::sqrt(b); };
    rep.value = alpha_of(beta);
    set_bracket(rep, rep.value, alpha_of(root.lo), alpha_of(root.hi));
    rep.residual = std::abs(f(beta));
    return rep;
}

Constants constants() {
    Constants c{};
    c.tau = (std::sqrt(5.0) + 1.0) / 2.0;
    c.rho1 = std::sqrt(2.0 + std::sqrt(5.0));
    c.rho2 = 1.5 * std::sqrt(2.0);
    double r33 = 3.0 * std::sqrt(33.0);
    c.omega = (std::cbrt(19.0 + r33) + std::cbrt(19.0 - r33) + 1.0) / 3.0;
    c.epsilon = (std::cbrt(54.0 - 2.0 * r33) + std::cbrt(54.0 + 2.0 * r33)) / 3.0;
    c.tau1 = 2.0 + std::sqrt(5.0);
    c.tau2 = 2.0 + c.epsilon;
    return c;
}

namespace {

// chi equation: (1 - a h) phi(G) - (a - (2a-1) h) phi(G)_u evaluated at
// lambda; h = h(lambda)_alpha.
double chi_equation(const DenseMatrix& m, const DenseMatrix& m_del, double alpha, double lambda) {
    ClosedForms cf = closed_forms(AlphaPoint{lambda, alpha});
    double fg = charpoly_eval(m, lambda);
    double fgu = charpoly_eval(m_del, lambda);
    return (1.0 - alpha * cf.h) * fg - (alpha - (2.0 * alpha - 1.0) * cf.h) * fgu;
}

double chi2_equation(const DenseMatrix& m, const DenseMatrix& m_del, double alpha, double lambda) {
    ClosedForms cf = closed_forms(AlphaPoint{lambda, alpha});
    double fg = charpoly_eval(m, lambda);
    double fgu = charpoly_eval(m_del, lambda);
    return (1.0 - alpha * cf.h) *
           (fg * (1.0 - alpha * cf.h) - 2.0 * alpha * fgu + 2.0 * (2.0 * alpha - 1.0) * fgu * cf.h);
}

bool compound_is_path(const Graph& g, int u) {
    // G_u(P_n) is a path iff G is a path with u an end vertex (K_1 included).
    auto rep_deg = g.degrees();
    if (g.n == 1) return true;
    if (g.max_degree() > 2) return false;
    if (static_cast<std::size_t>(g.n) != g.edges.size() + 1) return false;  // cycle
    if (!g.is_connected()) return false;
    return rep_deg[static_cast<std::size_t>(u)] == 1;
}

LimitReport chi_common(const Graph& g, int u, double alpha, bool two_paths) {
    if (u < 0 || u >= g.n) throw std::invalid_argument("chi_u: vertex out of range");
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("chi_u: alpha must lie in [0,1)");
    LimitReport rep;
    rep.defining_equation = two_paths ? "Theta(lambda)_{G,u,alpha,inf} = 0"
                                      : "(1-a h) phi(G) - (a-(2a-1) h) phi(G)_u = 0";
    bool degenerate_path = two_paths ? (g.n == 1) : compound_is_path(g, u);
    if (degenerate_path) {
        rep.value = 2.0;
        rep.defining_equation = "degenerate";
        set_bracket(rep, 2.0, 2.0, 2.0);
        rep.residual = 0.0;
        return rep;
    }
    DenseMatrix m = a_alpha(g, alpha);
    DenseMatrix m_del = delete_vertex(m, u);
    auto f = [&](double lambda) {
        return two_paths ? chi2_equation(m, m_del, alpha, lambda)
                         : chi_equation(m, m_del, alpha, lambda);
    };
    double hi = g.max_degree() + 2.0;
    try {
        auto root = largest_root_below(f, 2.0 + 1e-9, hi, 1e-3);
        rep.value = root.value;
        rep.lo = root.lo;
        rep.hi = root.hi;
        rep.iterations = root.iterations;
        rep.residual = std::abs(f(root.value));
    } catch (const std::domain_error&) {
        rep.value = 2.0;
        rep.defining_equation = "degenerate";
        set_bracket(rep, 2.0, 2.0, 2.0);
        rep.residual = 0.0;
    }
    return rep;
}

}  // namespace

LimitReport chi_u(const Graph& g, int u, double alpha) { return chi_common(g, u, alpha, false); }

LimitReport chi2_u(const Graph& g, int u, double alpha) { return chi_common(g, u, alpha, true); }

LimitReport xy_limit(const Graph& x_graph, int x, const Graph& y_graph, int y, double alpha) {
    LimitReport a = chi_u(x_graph, x, alpha);
    LimitReport b = chi_u(y_graph, y, alpha);
    LimitReport out = (a.value >= b.value) ? a : b;
    out.defining_equation = "max(chi_x(X), chi_y(Y)): " + out.defining_equation;
    return out;
}

namespace {

// phi(G) and phi(G \ tip) for a caterpillar at an adjacency point lambda,
// jointly rescaled; only the sign of a - t(lambda) b is consumed.
// Pendant-vertex rule: attaching w at v gives phi' = lambda phi - phi(G-v).
double cat_chi_equation(const Caterpillar& cat, double lambda) {
    double a = lambda, b = 1.0;  // first spine vertex; phi(empty) = 1
    for (std::size_t i = 0; i < cat.legs.size(); ++i) {
        if (i > 0) {
            double na = lambda * a - b;  // extend spine: new tip
            b = a;
            a = na;
        }
        for (int k = 0; k < cat.legs[i]; ++k) {
            double na = lambda * a - b;  // pendant at the tip
            b = lambda * b;
            a = na;
        }
        double m = std::max(std::abs(a), std::abs(b));
        if (m > 1e100) {
            a /= m;
            b /= m;
        }
    }
    double t = (lambda - std::sqrt(lambda * lambda - 4.0)) / 2.0;
    return a - t * b;
}

// Limit of rho_A when the spine keeps growing past the current tip: the
// largest root of phi(G) = t(lambda) phi(G \ tip), or 2 when there is none.
double cat_tail_limit(const Caterpillar& cat) {
    int maxleg = 0;
    for (int l : cat.legs) maxleg = std::max(maxleg, l);
    double hi = maxleg + 5.0;
    auto f = [&](double lambda) { return cat_chi_equation(cat, lambda); };
    try {
        return largest_root_below(f, 2.0 + 1e-9, hi, 1e-3).value;
    } catch (const std::domain_error&) {
        return 2.0;
    }
}

}  // namespace

std::vector<ShearerStep> shearer_approach(double target, int steps) {
    double rho1 = constants().rho1;
    if (target < rho1 - 1e-9)
        throw std::invalid_argument("shearer_approach: target below sqrt(2+sqrt(5))");
    if (steps < 1) throw std::invalid_argument("shearer_approach: need steps >= 1");
    std::vector<ShearerStep> out;
    Caterpillar cat;
    cat.legs = {0};
    for (int s = 0; s < steps; ++s) {
        if (s > 0) cat.legs.push_back(0);
        // Attach pendant legs at the new spine vertex while the radius stays
        // below target for the whole future of the sequence: every later
        // stage is bounded by the tail limit, so the test is against it
        // rather than the current finite radius.
        while (true) {
            cat.legs.back() += 1;
            if (cat_tail_limit(cat) > target) {
                cat.legs.back() -= 1;
                break;
            }
        }
        ShearerStep step;
        step.caterpillar = cat;
        step.radius = spectral_radius(cat.to_graph(), Model::A);
        out.push_back(std::move(step));
    }
    return out;
}

AalphaThresholds aalpha_thresholds(int n) {
    if (n < 4) throw std::invalid_argument("aalpha_thresholds: need n >= 4");
    AalphaThresholds t{};
    double np1 = static_cast<double>(n) + 1.0;
    t.s1 = 4.0 / (np1 + std::sqrt(np1 * np1 - 16.0));
    auto cubic_root = [](double c3, double c2, double c1, double c0, double lo, double hi) {
        auto f = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
        return bisect_newton(f, lo, hi).value;
    };
    t.s2 = cubic_root(2.0, -11.0, 16.0, -3.0, 0.219, 0.220);
    t.s3 = cubic_root(1.0, -6.0, 9.0, -1.0, 0.120, 0.121);
    t.s4 = cubic_root(2.0, -13.0, 20.0, -1.0, 0.051, 0.052);
    return t;
}

}  // namespace speclim
