#include "speclim/charpoly_alpha.hpp"

#include <cmath>
#include <stdexcept>

#include "speclim/matrices.hpp"
#include "speclim/spectra.hpp"

namespace speclim {

namespace {

void check_point(const AlphaPoint& p) {
    if (!(p.alpha >= 0.0 && p.alpha < 1.0))
        throw std::invalid_argument("alpha must lie in [0,1)");
    if (!std::isfinite(p.lambda)) throw std::invalid_argument("lambda must be finite");
}

double seed_p0(const AlphaPoint& p) {
    double d = 1.0 - p.alpha;
    return (1.0 - 2.0 * p.alpha) / (d * d);
}

}  // namespace

// phi(P_{n+1}) = (l-2a) phi(P_n) - (1-a)^2 phi(P_{n-1}), phi(P_0) seeded,
// phi(P_1) = l.
double phi_path(int n, const AlphaPoint& p) {
    check_point(p);
    if (n < 0) throw std::invalid_argument("phi_path: need n >= 0");
    if (n == 0) return seed_p0(p);
    double prev = seed_p0(p), cur = p.lambda;
    double off = (1.0 - p.alpha) * (1.0 - p.alpha);
    for (int k = 1; k < n; ++k) {
        double nxt = (p.lambda - 2.0 * p.alpha) * cur - off * prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// phi(B_n) = phi(P_n) - a phi(B_{n-1}) defines the sequence, but iterating
// that form excites a spurious (-a)^n mode through roundoff once a exceeds
// the dominant root. The expansion along the corner of the tridiagonal gives
// the equivalent stable form phi(B_{n+1}) = (l-2a) phi(B_n) - (1-a)^2
// phi(B_{n-1}) with phi(B_0) = 1, phi(B_1) = l - a.
double phi_B(int n, const AlphaPoint& p) {
    check_point(p);
    if (n < 0) throw std::invalid_argument("phi_B: need n >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = p.lambda - p.alpha;
    double off = (1.0 - p.alpha) * (1.0 - p.alpha);
    for (int k = 1; k < n; ++k) {
        double nxt = (p.lambda - 2.0 * p.alpha) * cur - off * prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// phi(H_{n+1}) = (l-2a) phi(H_n) - (1-a)^2 phi(H_{n-1}), phi(H_0) = 1,
// phi(H_1) = l - 2a.
double phi_H(int n, const AlphaPoint& p) {
    check_point(p);
    if (n < 0) throw std::invalid_argument("phi_H: need n >= 0");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = p.lambda - 2.0 * p.alpha;
    double off = (1.0 - p.alpha) * (1.0 - p.alpha);
    for (int k = 1; k < n; ++k) {
        double nxt = (p.lambda - 2.0 * p.alpha) * cur - off * prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

// phi(C_{n+2}) = (l-2a) phi(H_{n+1}) - 2(a-1)^2 phi(H_n) + 2(-1)^{n+1}(a-1)^{n+2}.
double phi_cycle(int m, const AlphaPoint& p) {
    check_point(p);
    if (m < 3) throw std::invalid_argument("phi_cycle: need a cycle on >= 3 vertices");
    int n = m - 2;
    double am1 = p.alpha - 1.0;
    double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
    return (p.lambda - 2.0 * p.alpha) * phi_H(n + 1, p) -
           2.0 * am1 * am1 * phi_H(n, p) + 2.0 * sign * std::pow(am1, n + 2);
}

ClosedForms closed_forms(const AlphaPoint& p) {
    check_point(p);
    double disc = (p.lambda - 4.0 * p.alpha + 2.0) * (p.lambda - 2.0);
    if (disc < 0.0) throw std::domain_error("closed_forms: negative discriminant");
    ClosedForms cf{};
    cf.delta = std::sqrt(disc);
    cf.s = (p.lambda - 2.0 * p.alpha + cf.delta) / 2.0;
    cf.t = (p.lambda - 2.0 * p.alpha - cf.delta) / 2.0;
    cf.h = (p.lambda - cf.delta) / (2.0 * p.alpha * (p.lambda - 2.0) + 2.0);
    return cf;
}

RatioReport ratio_limits(const AlphaPoint& p, int n_max) {
    check_point(p);
    if (p.lambda <= 2.0)
        throw std::domain_error("ratio_limits: need lambda > 2 (ratios oscillate otherwise)");
    if (n_max < 3) throw std::invalid_argument("ratio_limits: need n_max >= 3");
    // One joint pass over the three stable three-term recurrences with
    // periodic rescaling; a common scale factor drops out of the ratios.
    double off = (1.0 - p.alpha) * (1.0 - p.alpha);
    double coef = p.lambda - 2.0 * p.alpha;
    double p_prev = seed_p0(p), p_cur = p.lambda;      // phi(P_0), phi(P_1)
    double h_prev = 1.0, h_cur = coef;                 // phi(H_0), phi(H_1)
    double b_prev = 1.0, b_cur = p.lambda - p.alpha;   // phi(B_0), phi(B_1)
    // state after step k: p_cur = phi(P_{k+1}), b_cur = phi(B_{k+1}),
    // h_cur = phi(H_k), h_prev = phi(H_{k-1})
    for (int k = 1; k <= n_max - 2; ++k) {
        double p_nxt = coef * p_cur - off * p_prev;
        p_prev = p_cur;
        p_cur = p_nxt;
        double b_nxt = coef * b_cur - off * b_prev;
        b_prev = b_cur;
        b_cur = b_nxt;
        double h_nxt = coef * h_cur - off * h_prev;
        h_prev = h_cur;
        h_cur = h_nxt;
        double scale = std::abs(p_cur);
        if (scale > 1e100 || (scale > 0.0 && scale < 1e-100)) {
            p_prev /= scale;
            p_cur /= scale;
            b_prev /= scale;
            b_cur /= scale;
            h_prev /= scale;
            h_cur /= scale;
        }
    }
    // now p_cur = phi(P_{n-1}): advance P one more step to phi(P_n)
    double p_final = coef * p_cur - off * p_prev;
    RatioReport rep;
    rep.n = n_max;
    rep.h = closed_forms(p).h;
    rep.ratio_bp = b_cur / p_final;  // phi(B_{n-1}) / phi(P_n)
    rep.ratio_hb = h_prev / b_cur;   // phi(H_{n-2}) / phi(B_{n-1})
    rep.err_bp = std::abs(rep.ratio_bp - rep.h);
    rep.err_hb = std::abs(rep.ratio_hb - rep.h);
    return rep;
}

double join_phi(const Graph& g1, int u, const Graph& g2, int v, const AlphaPoint& p) {
    check_point(p);
    DenseMatrix m1 = a_alpha(g1, p.alpha);
    DenseMatrix m2 = a_alpha(g2, p.alpha);
    double f1 = charpoly_eval(m1, p.lambda);
    double f2 = charpoly_eval(m2, p.lambda);
    double f1u = charpoly_eval(delete_vertex(m1, u), p.lambda);
    double f2v = charpoly_eval(delete_vertex(m2, v), p.lambda);
    return f1 * f2 - p.alpha * f1u * f2 - p.alpha * f1 * f2v +
           (2.0 * p.alpha - 1.0) * f1u * f2v;
}

}  // namespace speclim
