#include "speclim/matrices.hpp"

#include <sstream>
#include <stdexcept>

#include "speclim/io.hpp"

namespace speclim {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

void fill_degrees(DenseMatrix& m, const Graph& g, double weight) {
    auto deg = g.degrees();
    for (int v = 0; v < g.n; ++v) m.at(v, v) += weight * deg[static_cast<std::size_t>(v)];
}

}  // namespace

DenseMatrix::DenseMatrix(int n_, MatrixSymmetry sym, bool real)
    : n(n_), symmetry(sym), all_real(real), a(static_cast<std::size_t>(n_) * n_) {}

DenseMatrix adjacency(const Graph& g) {
    DenseMatrix m(g.n, MatrixSymmetry::symmetric, true);
    for (auto [u, v] : g.edges) {
        m.at(u, v) = 1.0;
        m.at(v, u) = 1.0;
    }
    return m;
}

DenseMatrix laplacian(const Graph& g) {
    DenseMatrix m(g.n, MatrixSymmetry::symmetric, true);
    for (auto [u, v] : g.edges) {
        m.at(u, v) = -1.0;
        m.at(v, u) = -1.0;
    }
    fill_degrees(m, g, 1.0);
    return m;
}

DenseMatrix signless_laplacian(const Graph& g) {
    DenseMatrix m = adjacency(g);
    fill_degrees(m, g, 1.0);
    return m;
}

DenseMatrix a_alpha(const Graph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("a_alpha: alpha must lie in [0,1]");
    DenseMatrix m(g.n, MatrixSymmetry::symmetric, true);
    for (auto [u, v] : g.edges) {
        m.at(u, v) = 1.0 - alpha;
        m.at(v, u) = 1.0 - alpha;
    }
    fill_degrees(m, g, alpha);
    return m;
}

DenseMatrix signed_adjacency(const SignedGraph& sg) {
    DenseMatrix m(sg.base.n, MatrixSymmetry::symmetric, true);
    for (std::size_t e = 0; e < sg.base.edges.size(); ++e) {
        auto [u, v] = sg.base.edges[e];
        m.at(u, v) = sg.signs[e];
        m.at(v, u) = sg.signs[e];
    }
    return m;
}

DenseMatrix hermitian_adjacency(const MixedGraph& mg) {
    DenseMatrix m(mg.n, MatrixSymmetry::hermitian, mg.arcs.empty());
    for (auto [u, v] : mg.arcs) {
        if (mg.has_arc(v, u)) {
            m.at(u, v) = 1.0;
        } else {
            m.at(u, v) = kImag;
            m.at(v, u) = -kImag;
        }
    }
    bool real = true;
    for (const auto& z : m.a)
        if (z.imag() != 0.0) real = false;
    m.all_real = real;
    return m;
}

DenseMatrix skew_adjacency(const OrientedGraph& og) {
    DenseMatrix m(og.base.n, MatrixSymmetry::skew_symmetric, true);
    for (std::size_t e = 0; e < og.base.edges.size(); ++e) {
        int head = og.heads[e];
        int tail = og.tail_of(static_cast<int>(e));
        // arc tail -> head: entry (head, tail) = +1, (tail, head) = -1
        m.at(head, tail) = 1.0;
        m.at(tail, head) = -1.0;
    }
    return m;
}

DenseMatrix delete_vertex(const DenseMatrix& m, int v) {
    if (v < 0 || v >= m.n) throw std::invalid_argument("delete_vertex: index out of range");
    DenseMatrix out(m.n - 1, m.symmetry, m.all_real);
    for (int i = 0, ii = 0; i < m.n; ++i) {
        if (i == v) continue;
        for (int j = 0, jj = 0; j < m.n; ++j) {
            if (j == v) continue;
            out.at(ii, jj) = m.at(i, j);
            ++jj;
        }
        ++ii;
    }
    return out;
}

SignedGraph switch_signed(const SignedGraph& sg, const std::vector<int>& in_cut_set) {
    if (in_cut_set.size() != static_cast<std::size_t>(sg.base.n))
        throw std::invalid_argument("switch_signed: set indicator has wrong size");
    std::vector<int> signs = sg.signs;
    for (std::size_t e = 0; e < sg.base.edges.size(); ++e) {
        auto [u, v] = sg.base.edges[e];
        bool cu = in_cut_set[static_cast<std::size_t>(u)] != 0;
        bool cv = in_cut_set[static_cast<std::size_t>(v)] != 0;
        if (cu != cv) signs[e] = -signs[e];
    }
    return SignedGraph(sg.base, std::move(signs));
}

OrientedGraph switch_oriented(const OrientedGraph& og, const std::vector<int>& in_cut_set) {
    if (in_cut_set.size() != static_cast<std::size_t>(og.base.n))
        throw std::invalid_argument("switch_oriented: set indicator has wrong size");
    std::vector<int> heads = og.heads;
    for (std::size_t e = 0; e < og.base.edges.size(); ++e) {
        auto [u, v] = og.base.edges[e];
        bool cu = in_cut_set[static_cast<std::size_t>(u)] != 0;
        bool cv = in_cut_set[static_cast<std::size_t>(v)] != 0;
        if (cu != cv) heads[e] = (heads[e] == u) ? v : u;
    }
    return OrientedGraph(og.base, std::move(heads));
}

MixedGraph converse(const MixedGraph& mg) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(mg.arcs.size());
    for (auto [u, v] : mg.arcs) arcs.emplace_back(v, u);
    return MixedGraph(mg.n, std::move(arcs));
}

namespace {

const char* class_name(int c) {
    switch (c) {
        case FourWayPartition::v_plus1: return "V_1";
        case FourWayPartition::v_minus1: return "V_-1";
        case FourWayPartition::v_plusi: return "V_i";
        case FourWayPartition::v_minusi: return "V_-i";
    }
    return "?";
}

// The four classes carry the unit values 1, -1, i, -i.
std::complex<double> class_value(int c) {
    switch (c) {
        case FourWayPartition::v_plus1: return {1.0, 0.0};
        case FourWayPartition::v_minus1: return {-1.0, 0.0};
        case FourWayPartition::v_plusi: return {0.0, 1.0};
        default: return {0.0, -1.0};
    }
}

bool pair_is(int cu, int cv, int a, int b) { return cu == a && cv == b; }

}  // namespace

void validate_partition(const MixedGraph& mg, const FourWayPartition& p) {
    if (p.cls.size() != static_cast<std::size_t>(mg.n))
        throw std::runtime_error("four-way switching: partition has wrong size");
    for (int c : p.cls)
        if (c < 0 || c > 3) throw std::runtime_error("four-way switching: bad class index");
    constexpr int P1 = FourWayPartition::v_plus1, M1 = FourWayPartition::v_minus1,
                  PI = FourWayPartition::v_plusi, MI = FourWayPartition::v_minusi;
    for (auto [u, v] : mg.arcs) {
        int cu = p.cls[static_cast<std::size_t>(u)], cv = p.cls[static_cast<std::size_t>(v)];
        bool digon = mg.has_arc(v, u);
        if (digon) {
            // (a): no digons of types (1,-1) or (i,-i)
            if ((pair_is(cu, cv, P1, M1) || pair_is(cu, cv, M1, P1)) ||
                (pair_is(cu, cv, PI, MI) || pair_is(cu, cv, MI, PI)))
                throw std::runtime_error(
                    std::string("four-way switching: condition (a) violated by a digon of type (") +
                    class_name(cu) + ", " + class_name(cv) + ")");
        } else {
            // (b): single arcs of types (1,i), (i,-1), (-1,-i), (-i,1) must
            // be contained in digons
            if (pair_is(cu, cv, P1, PI) || pair_is(cu, cv, PI, M1) || pair_is(cu, cv, M1, MI) ||
                pair_is(cu, cv, MI, P1))
                throw std::runtime_error(
                    std::string("four-way switching: condition (b) violated by an arc of type (") +
                    class_name(cu) + ", " + class_name(cv) + ")");
        }
    }
}

MixedGraph four_way_switch(const MixedGraph& mg, const FourWayPartition& p) {
    validate_partition(mg, p);
    constexpr int P1 = FourWayPartition::v_plus1, M1 = FourWayPartition::v_minus1,
                  PI = FourWayPartition::v_plusi, MI = FourWayPartition::v_minusi;
    std::vector<std::pair<int, int>> out;
    auto cls = [&](int v) { return p.cls[static_cast<std::size_t>(v)]; };
    for (auto [u, v] : mg.arcs) {
        int cu = cls(u), cv = cls(v);
        bool digon = mg.has_arc(v, u);
        if (digon) {
            if (u > v) continue;  // handle each digon once
            // (ii) digons (1,i) -> arc V_1 to V_i; (-1,-i) -> arc V_-1 to V_-i
            int a = u, b = v, ca = cu, cb = cv;
            auto emit_digon = [&] {
                out.emplace_back(a, b);
                out.emplace_back(b, a);
            };
            if ((pair_is(ca, cb, P1, PI)) || (pair_is(cb, ca, P1, PI))) {
                if (pair_is(cb, ca, P1, PI)) std::swap(a, b);
                out.emplace_back(a, b);  // from V_1 to V_i
            } else if ((pair_is(ca, cb, M1, MI)) || (pair_is(cb, ca, M1, MI))) {
                if (pair_is(cb, ca, M1, MI)) std::swap(a, b);
                out.emplace_back(a, b);  // from V_-1 to V_-i
            } else if ((pair_is(ca, cb, P1, MI)) || (pair_is(cb, ca, P1, MI))) {
                // (iii) digon (1,-i) -> arc from V_-i to V_1
                if (pair_is(ca, cb, P1, MI)) std::swap(a, b);
                out.emplace_back(a, b);
            } else if ((pair_is(ca, cb, M1, PI)) || (pair_is(cb, ca, M1, PI))) {
                // (iii) digon (-1,i) -> arc from V_i to V_-1
                if (pair_is(ca, cb, M1, PI)) std::swap(a, b);
                out.emplace_back(a, b);
            } else {
                emit_digon();
            }
        } else {
            if (pair_is(cu, cv, P1, M1) || pair_is(cu, cv, M1, P1) || pair_is(cu, cv, PI, MI) ||
                pair_is(cu, cv, MI, PI)) {
                out.emplace_back(v, u);  // (i) reverse
            } else if (pair_is(cu, cv, P1, MI) || pair_is(cu, cv, M1, PI) ||
                       pair_is(cu, cv, PI, P1) || pair_is(cu, cv, MI, M1)) {
                out.emplace_back(u, v);  // (iv) becomes a digon
                out.emplace_back(v, u);
            } else {
                out.emplace_back(u, v);
            }
        }
    }
    MixedGraph result(mg.n, std::move(out));
    // the rule table must realize the conjugation H -> D* H D with
    // D = diag(class values)
    DenseMatrix h0 = hermitian_adjacency(mg), h1 = hermitian_adjacency(result);
    for (int i = 0; i < mg.n; ++i)
        for (int j = 0; j < mg.n; ++j) {
            auto expected = std::conj(class_value(cls(i))) * h0.at(i, j) * class_value(cls(j));
            if (std::abs(expected - h1.at(i, j)) > 1e-12)
                throw std::logic_error("four_way_switch: rule table disagrees with conjugation");
        }
    return result;
}

OrientedGraph bipartite_double(const OrientedGraph& og) {
    int n = og.base.n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> heads;
    for (std::size_t e = 0; e < og.base.edges.size(); ++e) {
        int t = og.tail_of(static_cast<int>(e));
        int h = og.heads[e];
        // u_i k -> u_j l for k != l; copies of v are 2v and 2v+1
        edges.emplace_back(2 * t, 2 * h + 1);
        heads.push_back(2 * h + 1);
        edges.emplace_back(2 * t + 1, 2 * h);
        heads.push_back(2 * h);
    }
    // normalize: Graph sorts edges, so re-derive heads afterwards
    Graph base(2 * n, edges);
    std::vector<int> sorted_heads(base.edges.size(), -1);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto norm = edges[k].first < edges[k].second
                        ? edges[k]
                        : std::make_pair(edges[k].second, edges[k].first);
        auto it = std::lower_bound(base.edges.begin(), base.edges.end(), norm);
        sorted_heads[static_cast<std::size_t>(it - base.edges.begin())] = heads[k];
    }
    return OrientedGraph(std::move(base), std::move(sorted_heads));
}

std::string matrix_to_json(const DenseMatrix& m) {
    std::ostringstream os;
    os << "{\"n\":" << m.n << ",\"symmetry\":\"";
    switch (m.symmetry) {
        case MatrixSymmetry::symmetric: os << "symmetric"; break;
        case MatrixSymmetry::hermitian: os << "hermitian"; break;
        case MatrixSymmetry::skew_symmetric: os << "skew_symmetric"; break;
        case MatrixSymmetry::general: os << "general"; break;
    }
    os << "\",\"all_real\":" << (m.all_real ? "true" : "false") << ",\"entries\":[";
    for (std::size_t k = 0; k < m.a.size(); ++k) {
        if (k) os << ",";
        os << "[" << format_real(m.a[k].real()) << "," << format_real(m.a[k].imag()) << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace speclim
