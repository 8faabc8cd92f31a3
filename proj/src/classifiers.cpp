#include "speclim/classifiers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "speclim/limit_points.hpp"
#include "speclim/matrices.hpp"
#include "speclim/spectra.hpp"

namespace speclim {

namespace {

std::string tag_t(const std::array<int, 3>& t) {
    std::ostringstream os;
    os << "T(" << t[0] << "," << t[1] << "," << t[2] << ")";
    return os.str();
}

std::string tag_q(const std::array<int, 3>& q) {
    std::ostringstream os;
    os << "Q(" << q[0] << "," << q[1] << "," << q[2] << ")";
    return os.str();
}

enum class SpectralSide { below, equal, above };

SpectralSide side_of(double rho, double threshold) {
    if (std::abs(rho - threshold) <= kSpectralTol) return SpectralSide::equal;
    return rho < threshold ? SpectralSide::below : SpectralSide::above;
}

}  // namespace

int h_shape_bstar(int a, int c) {
    if (a > 2) return a + c + 2;
    if (a == 2) return c + 3;
    return c;
}

// T_1: T(1,2,c) for c >= 6; T(1,b,c) for b >= 3, c >= max(b,4);
// T(2,2,c) for c >= 3; and T(2,3,3). Parameters sorted ascending.
bool in_T1_family(int a, int b, int c) {
    if (a == 1 && b == 2) return c >= 6;
    if (a == 1 && b >= 3) return c >= std::max(b, 4);
    if (a == 2 && b == 2) return c >= 3;
    if (a == 2 && b == 3 && c == 3) return true;
    return false;
}

// T_2: the five sporadic H-shapes plus {(a,c) != (1,1), b >= b*(a,c)}.
bool in_T2_family(int a, int b, int c) {
    static const std::array<std::array<int, 3>, 5> sporadic = {
        {{1, 1, 2}, {2, 4, 2}, {2, 5, 3}, {3, 7, 3}, {3, 8, 4}}};
    std::array<int, 3> q{a, b, c};
    if (std::find(sporadic.begin(), sporadic.end(), q) != sporadic.end()) return true;
    if (a == 1 && c == 1) return false;
    return b >= h_shape_bstar(a, c);
}

AMembership a_membership(const Graph& g, const ShapeReport& sh) {
    AMembership s;
    if (sh.path) s.lt2 = "P_" + std::to_string(g.n);
    if (sh.t_shape) {
        auto t = *sh.t_shape;
        if (t[0] == 1 && t[1] == 1) s.lt2 = tag_t(t);
        if (t[0] == 1 && t[1] == 2 && t[2] >= 2 && t[2] <= 4) s.lt2 = tag_t(t);
        if (t == std::array<int, 3>{2, 2, 2} || t == std::array<int, 3>{1, 2, 5} ||
            t == std::array<int, 3>{1, 3, 3})
            s.eq2 = tag_t(t);
        if (in_T1_family(t[0], t[1], t[2])) s.interval = tag_t(t);
    }
    if (sh.cycle) s.eq2 = "C_" + std::to_string(g.n);
    if (sh.double_snake) s.eq2 = "W_" + std::to_string(g.n);
    if (sh.star && *sh.star == 4) s.eq2 = "K_{1,4}";
    if (sh.h_shape) {
        auto q = *sh.h_shape;
        if (in_T2_family(q[0], q[1], q[2])) s.interval = tag_q(q);
    }
    return s;
}

QLMembership q_membership(const Graph& g, const ShapeReport& sh) {
    QLMembership s;
    if (sh.path) s.lt = "P_" + std::to_string(g.n);
    if (sh.cycle) s.eq = "C_" + std::to_string(g.n);
    if (sh.star && *sh.star == 3) s.eq = "K_{1,3}";
    if (sh.t_shape) {
        auto t = *sh.t_shape;
        if (t[0] == 1 && t[1] == 1 && t[2] >= 2) s.band1 = tag_t(t);
        if (t[0] == 1 && t[1] >= 2 && t[2] >= t[1]) s.band2 = tag_t(t);
    }
    if (sh.h_shape) {
        auto q = *sh.h_shape;
        if (q[1] >= q[0] + q[2] + 1) s.band2 = tag_q(q);
    }
    return s;
}

namespace {

// K_{1,3}+e (paw), K_4-e (diamond), K_4: the order-4 specials with L-index 4.
std::optional<std::string> l_small_special(const Graph& g) {
    if (g.n != 4 || !g.is_connected()) return std::nullopt;
    auto deg = g.degrees();
    std::sort(deg.begin(), deg.end());
    if (g.edges.size() == 4 && deg == std::vector<int>{1, 2, 2, 3}) return "K_{1,3}+e";
    if (g.edges.size() == 5) return "K_4-e";
    if (g.edges.size() == 6) return "K_4";
    return std::nullopt;
}

}  // namespace

QLMembership l_membership(const Graph& g, const ShapeReport& sh) {
    QLMembership s;
    if (sh.path) s.lt = "P_" + std::to_string(g.n);
    if (sh.cycle && g.n % 2 == 1) s.lt = "C_" + std::to_string(g.n);
    if (sh.cycle && g.n % 2 == 0) s.eq = "C_" + std::to_string(g.n);
    if (sh.star && *sh.star == 3) s.eq = "K_{1,3}";
    if (auto special = l_small_special(g)) s.eq = special;
    if (sh.t_shape) {
        auto t = *sh.t_shape;
        if (t[0] == 1 && t[1] == 1 && t[2] >= 2) s.band1 = tag_t(t);
        if (t[0] == 1 && t[1] >= 2 && t[2] >= t[1]) s.band2 = tag_t(t);
    }
    if (sh.h_shape) {
        auto q = *sh.h_shape;
        if (q[1] >= q[0] + q[2] + 1) s.band2 = tag_q(q);
        if (q[0] == 1 && q[2] == 1 && g.n >= 8) s.band2 = "W_" + std::to_string(g.n);
    }
    return s;
}

AalphaMembership aalpha_membership(const Graph& g, const ShapeReport& sh, double alpha) {
    AalphaMembership s;
    if (sh.path) {
        if (alpha < 1.0 || g.n <= 2)
            s.lt2 = "P_" + std::to_string(g.n);  // max degree <= 1 when n <= 2
        else
            s.eq2 = "P_" + std::to_string(g.n);
    }
    if (sh.cycle) s.eq2 = "C_" + std::to_string(g.n);
    if (sh.double_snake && alpha == 0.0) s.eq2 = "W_" + std::to_string(g.n);
    if (sh.t_shape) {
        auto t = *sh.t_shape;
        if (t[0] == 1 && t[1] == 1) {
            double s1 = aalpha_thresholds(g.n).s1;
            if (alpha < s1 - kSpectralTol)
                s.lt2 = tag_t(t);
            else if (std::abs(alpha - s1) <= kSpectralTol)
                s.eq2 = tag_t(t);
        }
        if (t[0] == 1 && t[1] == 2 && t[2] >= 2 && t[2] <= 4) {
            AalphaThresholds th = aalpha_thresholds(4);
            double s_thr = t[2] == 2 ? th.s2 : (t[2] == 3 ? th.s3 : th.s4);
            if (alpha < s_thr - kSpectralTol)
                s.lt2 = tag_t(t);
            else if (std::abs(alpha - s_thr) <= kSpectralTol)
                s.eq2 = tag_t(t);
        }
        if (alpha == 0.0 &&
            (t == std::array<int, 3>{2, 2, 2} || t == std::array<int, 3>{1, 2, 5} ||
             t == std::array<int, 3>{1, 3, 3}))
            s.eq2 = tag_t(t);
    }
    if (sh.star && *sh.star == 4 && alpha == 0.0) s.eq2 = "K_{1,4}";
    return s;
}

ClassificationResult classify_A(const Graph& g) {
    if (!g.is_connected()) throw std::runtime_error("classify_A: graph is disconnected");
    ClassificationResult res;
    res.model = "A";
    res.radius = spectral_radius(g, Model::A);
    Constants c = constants();
    ShapeReport sh = recognize_shape(g);
    AMembership st = a_membership(g, sh);
    SpectralSide at2 = side_of(res.radius, 2.0);
    if (at2 == SpectralSide::below) {
        res.region = "<2";
        res.family = st.lt2;
        res.agreement = st.lt2.has_value();
    } else if (at2 == SpectralSide::equal) {
        // equality needs structural confirmation; a structurally confirmed
        // below-member (a long T(1,1,c), say) resolves to "<2"
        if (st.eq2) {
            res.region = "=2";
            res.family = st.eq2;
            res.agreement = true;
        } else if (st.lt2) {
            res.region = "<2";
            res.family = st.lt2;
            res.agreement = true;
        } else {
            res.region = "=2";
            res.agreement = false;
        }
    } else if (res.radius < c.rho1) {
        res.region = "(2,rho1)";
        res.family = st.interval;
        res.agreement = st.interval.has_value();
    } else if (res.radius < c.rho2) {
        // structural-only claim: open quipu, closed quipu, or dagger
        res.region = "[rho1,rho2)";
        if (sh.dagger)
            res.family = "dagger(" + std::to_string(*sh.dagger) + ")";
        else if (sh.open_quipu)
            res.family = "open_quipu";
        else if (sh.closed_quipu)
            res.family = "closed_quipu";
        res.agreement = res.family.has_value();
    } else {
        res.region = ">=rho2";
        res.agreement = true;  // no structural claim in this region
    }
    return res;
}

ClassificationResult classify_Q(const Graph& g) {
    if (!g.is_connected()) throw std::runtime_error("classify_Q: graph is disconnected");
    ClassificationResult res;
    res.model = "Q";
    res.radius = spectral_radius(g, Model::Q);
    Constants c = constants();
    ShapeReport sh = recognize_shape(g);
    QLMembership st = q_membership(g, sh);
    SpectralSide at4 = side_of(res.radius, 4.0);
    if (at4 == SpectralSide::below) {
        res.region = "<4";
        res.family = st.lt;
        res.agreement = st.lt.has_value();
    } else if (at4 == SpectralSide::equal) {
        if (st.eq) {
            res.region = "=4";
            res.family = st.eq;
            res.agreement = true;
        } else if (st.lt) {
            res.region = "<4";
            res.family = st.lt;
            res.agreement = true;
        } else {
            res.region = "=4";
            res.agreement = false;
        }
    } else if (res.radius <= c.tau1 + kSpectralTol) {
        res.region = "(4,tau1]";
        res.family = st.band1;
        res.agreement = st.band1.has_value();
    } else if (res.radius <= c.tau2 + kSpectralTol) {
        res.region = "(tau1,tau2]";
        res.family = st.band2;
        res.agreement = st.band2.has_value();
    } else if (res.radius <= 4.5 + kSpectralTol) {
        res.region = "(tau2,4.5]";
        if (sh.open_quipu)
            res.family = "open_quipu";
        else if (sh.closed_quipu)
            res.family = "closed_quipu";
        res.agreement = res.family.has_value();
    } else {
        res.region = ">4.5";
        res.agreement = true;
    }
    return res;
}

ClassificationResult classify_L(const Graph& g) {
    if (!g.is_connected()) throw std::runtime_error("classify_L: graph is disconnected");
    ClassificationResult res;
    res.model = "L";
    res.radius = spectral_radius(g, Model::L);
    Constants c = constants();
    ShapeReport sh = recognize_shape(g);
    QLMembership st = l_membership(g, sh);
    SpectralSide at4 = side_of(res.radius, 4.0);
    if (at4 == SpectralSide::below) {
        res.region = "<4";
        res.family = st.lt;
        res.agreement = st.lt.has_value();
    } else if (at4 == SpectralSide::equal) {
        if (st.eq) {
            res.region = "=4";
            res.family = st.eq;
            res.agreement = true;
        } else if (st.lt) {
            res.region = "<4";
            res.family = st.lt;
            res.agreement = true;
        } else {
            res.region = "=4";
            res.agreement = false;
        }
    } else if (res.radius <= c.tau1 + kSpectralTol) {
        // T_{1,1,n-3} matched structurally; L_n is figure-only and reported
        // as unmatched
        res.region = "(4,tau1]";
        res.family = st.band1;
        res.agreement = st.band1.has_value();
    } else if (res.radius <= c.tau2 + kSpectralTol) {
        res.region = "(tau1,tau2]";
        res.family = st.band2;
        res.agreement = st.band2.has_value();
    } else if (res.radius <= 4.5 + kSpectralTol) {
        res.region = "(tau2,4.5]";
        if (sh.open_quipu)
            res.family = "open_quipu";
        else if (sh.closed_quipu)
            res.family = "closed_quipu";
        res.agreement = res.family.has_value();
    } else {
        res.region = ">4.5";
        res.agreement = true;
    }
    return res;
}

ClassificationResult classify_Aalpha(const Graph& g, double alpha) {
    if (!g.is_connected()) throw std::runtime_error("classify_Aalpha: graph is disconnected");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("classify_Aalpha: alpha must lie in [0,1]");
    ClassificationResult res;
    res.model = "Aalpha";
    res.radius = spectral_radius(g, Model::Aalpha, alpha);
    ShapeReport sh = recognize_shape(g);
    AalphaMembership st = aalpha_membership(g, sh, alpha);
    SpectralSide at2 = side_of(res.radius, 2.0);
    if (at2 == SpectralSide::below) {
        res.region = "<2";
        res.family = st.lt2;
        res.agreement = st.lt2.has_value();
    } else if (at2 == SpectralSide::equal) {
        if (st.eq2) {
            res.region = "=2";
            res.family = st.eq2;
            res.agreement = true;
        } else if (st.lt2) {
            res.region = "<2";
            res.family = st.lt2;
            res.agreement = true;
        } else {
            res.region = "=2";
            res.agreement = false;
        }
    } else {
        res.region = ">2";
        res.agreement = !st.lt2.has_value() && !st.eq2.has_value();
    }
    return res;
}

namespace {

// Cycle gain as a power of i (0..3), traversed along the stored cycle order;
// digons contribute 0, co-oriented arcs +1, contra-oriented arcs -1.
int cycle_gain_mod4(const MixedGraph& mg, const std::vector<int>& cyc) {
    int j = 0;
    int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i) {
        int u = cyc[static_cast<std::size_t>(i)];
        int v = cyc[static_cast<std::size_t>((i + 1) % len)];
        bool uv = mg.has_arc(u, v), vu = mg.has_arc(v, u);
        if (uv && vu) continue;
        if (uv) ++j;
        else --j;
    }
    return ((j % 4) + 4) % 4;
}

// The unique cycle of a connected unicyclic underlying graph, in order.
std::vector<int> find_cycle(const Graph& g) {
    auto adj = g.adjacency_list();
    std::vector<int> deg = g.degrees();
    std::queue<int> q;
    std::vector<char> removed(static_cast<std::size_t>(g.n), 0);
    for (int v = 0; v < g.n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        removed[static_cast<std::size_t>(v)] = 1;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!removed[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 1)
                q.push(w);
    }
    std::vector<int> cyc;
    int start = -1;
    for (int v = 0; v < g.n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) {
            start = v;
            break;
        }
    if (start < 0) return cyc;
    int prev = -1, cur = start;
    do {
        cyc.push_back(cur);
        int nxt = -1;
        for (int w : adj[static_cast<std::size_t>(cur)])
            if (!removed[static_cast<std::size_t>(w)] && w != prev) {
                nxt = w;
                break;
            }
        prev = cur;
        cur = nxt;
    } while (cur != start && cur >= 0);
    return cyc;
}

// Pendant path length at each cycle vertex (0 when bare); nullopt when some
// branch is not a single bare path.
std::optional<std::vector<int>> cycle_branch_lengths(const Graph& ug, const std::vector<int>& cyc) {
    auto adj = ug.adjacency_list();
    auto deg = ug.degrees();
    std::vector<char> on_cycle(static_cast<std::size_t>(ug.n), 0);
    for (int v : cyc) on_cycle[static_cast<std::size_t>(v)] = 1;
    std::vector<int> lens;
    for (int v : cyc) {
        int total = 0;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (on_cycle[static_cast<std::size_t>(w)]) continue;
            int len = 0;
            int prev = v, cur = w;
            while (true) {
                ++len;
                if (deg[static_cast<std::size_t>(cur)] == 1) break;
                if (deg[static_cast<std::size_t>(cur)] != 2) return std::nullopt;
                int nxt = -1;
                for (int z : adj[static_cast<std::size_t>(cur)])
                    if (z != prev) nxt = z;
                prev = cur;
                cur = nxt;
            }
            if (total > 0) return std::nullopt;  // at most one branch per corner
            total = len;
        }
        lens.push_back(total);
    }
    return lens;
}

bool box_matches(const std::vector<int>& lens, const std::array<int, 4>& want) {
    for (int r = 0; r < 4; ++r) {
        std::array<int, 4> got{lens[static_cast<std::size_t>(r % 4)],
                               lens[static_cast<std::size_t>((r + 1) % 4)],
                               lens[static_cast<std::size_t>((r + 2) % 4)],
                               lens[static_cast<std::size_t>((r + 3) % 4)]};
        if (got == want) return true;
        std::array<int, 4> rev{got[0], got[3], got[2], got[1]};
        if (rev == want) return true;
    }
    return false;
}

}  // namespace

ClassificationResult classify_mixed(const MixedGraph& mg) {
    if (!mg.is_connected()) throw std::runtime_error("classify_mixed: graph is disconnected");
    ClassificationResult res;
    res.model = "Hermitian";
    res.radius = spectral_radius(mg);
    SpectralSide at2 = side_of(res.radius, 2.0);
    res.region = at2 == SpectralSide::below ? "<2" : (at2 == SpectralSide::equal ? "=2" : ">2");

    Graph ug = mg.underlying();
    std::size_t m = ug.edges.size();

    if (m + 1 == static_cast<std::size_t>(ug.n)) {
        // trees: all mixed graphs over one forest are switching equivalent,
        // so the underlying shape decides the family
        ShapeReport sh = recognize_shape(ug);
        if (sh.path) res.family = "P_" + std::to_string(ug.n);
        if (sh.t_shape) {
            auto t = *sh.t_shape;
            if (t[0] == 1 && t[1] == 1) res.family = tag_t(t);
            if (t[0] == 1 && t[1] == 2 && t[2] >= 2 && t[2] <= 4) res.family = tag_t(t);
        }
    } else if (m == static_cast<std::size_t>(ug.n)) {
        auto cyc = find_cycle(ug);
        int len = static_cast<int>(cyc.size());
        if (len == ug.n) {
            // pure mixed cycle: match the gain class of D_n and the three
            // C-variants, up to converse (gain conjugation)
            int gain = cycle_gain_mod4(mg, cyc);
            int n = ug.n;
            auto matches = [&](int offset) {
                int fwd = ((n + offset) % 4 + 4) % 4;
                int conj = ((-(n + offset)) % 4 + 4) % 4;
                return gain == fwd || gain == conj;
            };
            if (matches(0)) res.family = "D_" + std::to_string(n);
            else if (matches(-2)) res.family = "C~_" + std::to_string(n);
            else if (matches(-1)) res.family = "C~'_" + std::to_string(n);
            else if (matches(1)) res.family = "C~''_" + std::to_string(n);
        } else if (len == 4) {
            // box family: negative quadrangle with pendant directed paths
            auto lens = cycle_branch_lengths(ug, cyc);
            if (lens && cycle_gain_mod4(mg, cyc) == 2) {
                const auto& l = *lens;
                bool tagged = false;
                for (int r = 0; r < 4 && !tagged; ++r) {
                    int a0 = l[static_cast<std::size_t>(r)],
                        b0 = l[static_cast<std::size_t>((r + 1) % 4)],
                        c0 = l[static_cast<std::size_t>((r + 2) % 4)],
                        d0 = l[static_cast<std::size_t>((r + 3) % 4)];
                    if (b0 == 0 && d0 == 0) {
                        res.family = "box(" + std::to_string(std::max(a0, c0)) + ",0," +
                                     std::to_string(std::min(a0, c0)) + ",0)";
                        tagged = true;
                    }
                }
                if (!tagged) {
                    static const std::array<std::array<int, 4>, 6> listed = {
                        {{3, 1, 0, 0}, {2, 1, 1, 0}, {2, 1, 0, 0}, {1, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 0}}};
                    for (const auto& w : listed)
                        if (box_matches(l, w)) {
                            res.family = "box(" + std::to_string(w[0]) + "," + std::to_string(w[1]) +
                                         "," + std::to_string(w[2]) + "," + std::to_string(w[3]) + ")";
                            break;
                        }
                }
            }
        } else if (len == 3 && ug.n == 4) {
            // directed triangle with one pendant arc
            int gain = cycle_gain_mod4(mg, cyc);
            if (gain == 1 || gain == 3) res.family = "D_3+arc";
        }
    }
    res.agreement = res.family.has_value();
    return res;
}

}  // namespace speclim
