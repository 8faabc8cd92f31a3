#include "speclim/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace speclim {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

UniformHypergraph::UniformHypergraph(int n_, int r_, std::vector<std::vector<int>> edges_)
    : n(n_), r(r_), edges(std::move(edges_)) {
    require(n >= 1, "hypergraph: need n >= 1");
    require(r >= 2, "hypergraph: need uniformity r >= 2");
    require(!edges.empty(), "hypergraph: edge set must be non-empty");
    for (auto& e : edges) {
        require(static_cast<int>(e.size()) == r, "hypergraph: edge of wrong size");
        std::sort(e.begin(), e.end());
        require(std::adjacent_find(e.begin(), e.end()) == e.end(),
                "hypergraph: repeated vertex in an edge");
        require(e.front() >= 0 && e.back() < n, "hypergraph: vertex out of range");
    }
}

std::vector<int> UniformHypergraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges)
        for (int v : e) ++deg[static_cast<std::size_t>(v)];
    return deg;
}

bool UniformHypergraph::is_connected() const {
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (int v : edges[i]) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(edges[0][0]);
    seen[static_cast<std::size_t>(edges[0][0])] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int ei : incident[static_cast<std::size_t>(v)])
            for (int w : edges[static_cast<std::size_t>(ei)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    q.push(w);
                }
    }
    return reached == n;
}

UniformHypergraph UniformHypergraph::from_graph(const Graph& g) {
    std::vector<std::vector<int>> es;
    es.reserve(g.edges.size());
    for (auto [u, v] : g.edges) es.push_back({u, v});
    return UniformHypergraph(g.n, 2, std::move(es));
}

double f_H(const UniformHypergraph& h, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("f_H: dimension mismatch");
    double sum = 0.0;
    for (const auto& e : h.edges) {
        double prod = 1.0;
        for (int v : e) prod *= x[static_cast<std::size_t>(v)];
        sum += prod;
    }
    return h.r * sum;
}

std::vector<double> tensor_apply(const UniformHypergraph& h, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("tensor_apply: dimension mismatch");
    std::vector<double> y(static_cast<std::size_t>(h.n), 0.0);
    for (const auto& e : h.edges) {
        for (int v : e) {
            double prod = 1.0;
            for (int w : e)
                if (w != v) prod *= x[static_cast<std::size_t>(w)];
            y[static_cast<std::size_t>(v)] += prod;
        }
    }
    return y;
}

namespace {

// Shifted power iteration for the Perron value of one connected hypergraph.
TensorRadiusReport component_radius(const UniformHypergraph& h) {
    const int n = h.n;
    const int r = h.r;
    const double shift = 1.0;
    const double expo = 1.0 / (r - 1);
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    auto renorm = [&](std::vector<double>& v) {
        double s = 0.0;
        for (double t : v) s += std::pow(t, r);
        double scale = std::pow(s, -1.0 / r);
        for (double& t : v) t *= scale;
    };
    renorm(x);
    TensorRadiusReport rep;
    for (int it = 1; it <= 100000; ++it) {
        std::vector<double> y = tensor_apply(h, x);
        double rho = f_H(h, x);  // ||x||_r = 1 makes this the Rayleigh value
        double resid = 0.0;
        for (int j = 0; j < n; ++j)
            resid = std::max(resid, std::abs(y[static_cast<std::size_t>(j)] -
                                             rho * std::pow(x[static_cast<std::size_t>(j)], r - 1)));
        if (resid < 1e-9) {
            rep.value = rho;
            rep.iterations = it;
            rep.residual = resid;
            return rep;
        }
        for (int j = 0; j < n; ++j) {
            double z = y[static_cast<std::size_t>(j)] +
                       shift * std::pow(x[static_cast<std::size_t>(j)], r - 1);
            x[static_cast<std::size_t>(j)] = std::pow(z, expo);
        }
        renorm(x);
    }
    throw std::runtime_error("tensor_radius: power iteration did not converge in 1e5 steps");
}

}  // namespace

TensorRadiusReport tensor_radius(const UniformHypergraph& h) {
    // split into connected components and take the max
    std::vector<int> comp(static_cast<std::size_t>(h.n), -1);
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(h.n));
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (int v : h.edges[i]) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    int ncomp = 0;
    for (int s = 0; s < h.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[static_cast<std::size_t>(s)] = ncomp;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int ei : incident[static_cast<std::size_t>(v)])
                for (int w : h.edges[static_cast<std::size_t>(ei)])
                    if (comp[static_cast<std::size_t>(w)] < 0) {
                        comp[static_cast<std::size_t>(w)] = ncomp;
                        q.push(w);
                    }
        }
        ++ncomp;
    }
    TensorRadiusReport best;
    bool any = false;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> remap(static_cast<std::size_t>(h.n), -1);
        int cn = 0;
        for (int v = 0; v < h.n; ++v)
            if (comp[static_cast<std::size_t>(v)] == c) remap[static_cast<std::size_t>(v)] = cn++;
        std::vector<std::vector<int>> ces;
        for (const auto& e : h.edges)
            if (comp[static_cast<std::size_t>(e[0])] == c) {
                std::vector<int> ne;
                for (int v : e) ne.push_back(remap[static_cast<std::size_t>(v)]);
                ces.push_back(std::move(ne));
            }
        if (ces.empty()) continue;  // isolated vertices contribute radius 0
        auto rep = component_radius(UniformHypergraph(cn, h.r, std::move(ces)));
        if (!any || rep.value > best.value) best = rep;
        any = true;
    }
    if (!any) throw std::invalid_argument("tensor_radius: hypergraph has no edges");
    return best;
}

UniformHypergraph extend(const UniformHypergraph& h) {
    std::vector<std::vector<int>> es = h.edges;
    int next = h.n;
    for (auto& e : es) e.push_back(next++);
    return UniformHypergraph(next, h.r + 1, std::move(es));
}

UniformHypergraph reduce(const UniformHypergraph& h) {
    if (h.r <= 2) throw std::runtime_error("reduce: uniformity would drop below 2");
    auto deg = h.degrees();
    std::vector<std::vector<int>> es;
    std::vector<int> removed;
    for (const auto& e : h.edges) {
        int leaf = -1;
        for (int v : e)
            if (deg[static_cast<std::size_t>(v)] == 1) leaf = std::max(leaf, v);
        if (leaf < 0) throw std::runtime_error("reduce: an edge has no leaf vertex");
        std::vector<int> ne;
        for (int v : e)
            if (v != leaf) ne.push_back(v);
        es.push_back(std::move(ne));
        removed.push_back(leaf);
    }
    // compact the vertex numbering
    std::sort(removed.begin(), removed.end());
    std::vector<int> remap(static_cast<std::size_t>(h.n), 0);
    int cn = 0;
    for (int v = 0; v < h.n; ++v) {
        if (std::binary_search(removed.begin(), removed.end(), v)) {
            remap[static_cast<std::size_t>(v)] = -1;
        } else {
            remap[static_cast<std::size_t>(v)] = cn++;
        }
    }
    for (auto& e : es)
        for (int& v : e) v = remap[static_cast<std::size_t>(v)];
    return UniformHypergraph(cn, h.r - 1, std::move(es));
}

UniformHypergraph hyperpath(int r, int m) {
    require(r >= 2, "hyperpath: need r >= 2");
    require(m >= 1, "hyperpath: need m >= 1");
    std::vector<std::vector<int>> es;
    for (int k = 0; k < m; ++k) {
        std::vector<int> e;
        for (int j = 0; j < r; ++j) e.push_back(k * (r - 1) + j);
        es.push_back(std::move(e));
    }
    return UniformHypergraph(m * (r - 1) + 1, r, std::move(es));
}

UniformHypergraph hypercycle(int r, int m) {
    require(r >= 2, "hypercycle: need r >= 2");
    require(m >= 2, "hypercycle: need m >= 2");
    if (m == 2) {
        require(r >= 3, "hypercycle: m = 2 needs r >= 3");
        // two edges sharing exactly the two vertices 0,1
        std::vector<int> e0, e1{0, 1};
        for (int j = 0; j < r; ++j) e0.push_back(j);
        for (int j = 0; j < r - 2; ++j) e1.push_back(r + j);
        return UniformHypergraph(2 * r - 2, r, {e0, e1});
    }
    int n = m * (r - 1);
    std::vector<std::vector<int>> es;
    for (int k = 0; k < m; ++k) {
        std::vector<int> e;
        for (int j = 0; j < r; ++j) e.push_back((k * (r - 1) + j) % n);
        es.push_back(std::move(e));
    }
    return UniformHypergraph(n, r, std::move(es));
}

namespace {

// Attach a 3-uniform loose path of `len` edges at vertex `anchor`, taking
// fresh vertex labels from `next`.
void attach_path3(std::vector<std::vector<int>>& es, int anchor, int len, int& next) {
    int prev = anchor;
    for (int k = 0; k < len; ++k) {
        int mid = next++;
        int end = next++;
        es.push_back({prev, mid, end});
        prev = end;
    }
}

}  // namespace

UniformHypergraph e_family(int i, int j, int k) {
    require(i >= 1 && j >= 1 && k >= 1, "e_family: need path lengths >= 1");
    std::vector<std::vector<int>> es;
    int next = 1;
    for (int len : {i, j, k}) attach_path3(es, 0, len, next);
    return UniformHypergraph(next, 3, std::move(es));
}

UniformHypergraph f_family(int i, int j, int k) {
    require(i >= 1 && j >= 1 && k >= 1, "f_family: need path lengths >= 1");
    std::vector<std::vector<int>> es = {{0, 1, 2}};
    int next = 3;
    int anchor = 0;
    for (int len : {i, j, k}) attach_path3(es, anchor++, len, next);
    return UniformHypergraph(next, 3, std::move(es));
}

UniformHypergraph g_family(int i, int j, int k, int l, int t) {
    require(i >= 1 && j >= 1 && l >= 1 && t >= 1, "g_family: need attachment lengths >= 1");
    require(k >= 0, "g_family: need k >= 0");
    int central = k + 2;
    UniformHypergraph base = hyperpath(3, central);
    std::vector<std::vector<int>> es = base.edges;
    int next = base.n;
    // free vertices of the first edge {0,1,2}: 0 and 1 (2 is shared when the
    // path has a second edge); free vertices of the last edge: its two
    // largest labels
    int a1 = 0, a2 = 1;
    int last_base = (central - 1) * 2;  // first vertex of the last edge
    int b1 = last_base + 1, b2 = last_base + 2;
    attach_path3(es, a1, i, next);
    attach_path3(es, a2, j, next);
    attach_path3(es, b1, l, next);
    attach_path3(es, b2, t, next);
    return UniformHypergraph(next, 3, std::move(es));
}

}  // namespace speclim
