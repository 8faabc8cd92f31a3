#include "speclim/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace speclim {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_vertex(const std::string& tok, int n, int line_no) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0') fail(line_no, "expected a vertex index, got '" + tok + "'");
    if (v < 0 || v >= n) fail(line_no, "vertex index " + tok + " out of range");
    return static_cast<int>(v);
}

enum class LineKind { plain, sign, arc, digon, oriented };

}  // namespace

AnyGraph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    bool saw_plain = false, saw_sign = false, saw_mixed = false, saw_oriented = false;
    std::vector<std::pair<int, int>> plain_edges;
    std::vector<int> signs;
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, int>> oriented_edges;  // tail, head

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens(strip_comment(line));
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "n") fail(line_no, "expected header 'n <count>'");
            char* end = nullptr;
            long v = std::strtol(toks[1].c_str(), &end, 10);
            if (end == toks[1].c_str() || *end != '\0' || v < 0)
                fail(line_no, "bad vertex count '" + toks[1] + "'");
            n = static_cast<int>(v);
            continue;
        }
        LineKind kind;
        int u, v;
        if (toks.size() == 2) {
            kind = LineKind::plain;
            u = parse_vertex(toks[0], n, line_no);
            v = parse_vertex(toks[1], n, line_no);
        } else if (toks.size() == 3 && (toks[2] == "+" || toks[2] == "-")) {
            kind = LineKind::sign;
            u = parse_vertex(toks[0], n, line_no);
            v = parse_vertex(toks[1], n, line_no);
        } else if (toks.size() == 3 && (toks[1] == ">" || toks[1] == "=" || toks[1] == "->")) {
            kind = toks[1] == ">" ? LineKind::arc
                                  : (toks[1] == "=" ? LineKind::digon : LineKind::oriented);
            u = parse_vertex(toks[0], n, line_no);
            v = parse_vertex(toks[2], n, line_no);
        } else {
            fail(line_no, "unrecognized edge syntax");
        }
        switch (kind) {
            case LineKind::plain:
                saw_plain = true;
                plain_edges.emplace_back(u, v);
                break;
            case LineKind::sign:
                saw_sign = true;
                plain_edges.emplace_back(u, v);
                signs.push_back(toks[2] == "+" ? 1 : -1);
                break;
            case LineKind::arc:
                saw_mixed = true;
                arcs.emplace_back(u, v);
                break;
            case LineKind::digon:
                saw_mixed = true;
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
                break;
            case LineKind::oriented:
                saw_oriented = true;
                oriented_edges.emplace_back(u, v);
                break;
        }
        int flavors = (saw_plain ? 1 : 0) + (saw_sign ? 1 : 0) + (saw_mixed ? 1 : 0) +
                      (saw_oriented ? 1 : 0);
        if (flavors > 1) fail(line_no, "mixed edge syntaxes in one file");
    }
    if (n < 0) throw std::runtime_error("empty graph file (missing 'n <count>' header)");

    if (saw_sign) {
        Graph base(n, plain_edges);
        // signs must be realigned to the sorted edge order
        std::vector<int> sorted_signs(base.edges.size(), 0);
        for (std::size_t k = 0; k < plain_edges.size(); ++k) {
            auto e = plain_edges[k].first < plain_edges[k].second
                         ? plain_edges[k]
                         : std::make_pair(plain_edges[k].second, plain_edges[k].first);
            auto it = std::lower_bound(base.edges.begin(), base.edges.end(), e);
            sorted_signs[static_cast<std::size_t>(it - base.edges.begin())] = signs[k];
        }
        return SignedGraph(std::move(base), std::move(sorted_signs));
    }
    if (saw_mixed) return MixedGraph(n, std::move(arcs));
    if (saw_oriented) {
        std::vector<std::pair<int, int>> es;
        es.reserve(oriented_edges.size());
        for (auto [t, h] : oriented_edges) es.emplace_back(t, h);
        Graph base(n, es);
        std::vector<int> heads(base.edges.size(), -1);
        for (auto [t, h] : oriented_edges) {
            auto e = t < h ? std::make_pair(t, h) : std::make_pair(h, t);
            auto it = std::lower_bound(base.edges.begin(), base.edges.end(), e);
            heads[static_cast<std::size_t>(it - base.edges.begin())] = h;
        }
        return OrientedGraph(std::move(base), std::move(heads));
    }
    return Graph(n, std::move(plain_edges));
}

AnyGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.n << "\n";
    for (auto [u, v] : g.edges) os << u << " " << v << "\n";
    return os.str();
}

std::string write_graph(const SignedGraph& sg) {
    std::ostringstream os;
    os << "n " << sg.base.n << "\n";
    for (std::size_t e = 0; e < sg.base.edges.size(); ++e)
        os << sg.base.edges[e].first << " " << sg.base.edges[e].second << " "
           << (sg.signs[e] > 0 ? "+" : "-") << "\n";
    return os.str();
}

std::string write_graph(const MixedGraph& mg) {
    std::ostringstream os;
    os << "n " << mg.n << "\n";
    for (auto [u, v] : mg.arcs) {
        if (mg.has_arc(v, u)) {
            if (u < v) os << u << " = " << v << "\n";
        } else {
            os << u << " > " << v << "\n";
        }
    }
    return os.str();
}

std::string write_graph(const OrientedGraph& og) {
    std::ostringstream os;
    os << "n " << og.base.n << "\n";
    for (std::size_t e = 0; e < og.base.edges.size(); ++e)
        os << og.tail_of(static_cast<int>(e)) << " -> " << og.heads[e] << "\n";
    return os.str();
}

UniformHypergraph read_hypergraph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int r = -1, n = -1;
    long m = -1;
    std::vector<std::vector<int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens(strip_comment(line));
        if (toks.empty()) continue;
        if (r < 0) {
            if (toks.size() != 3) fail(line_no, "expected header 'r n m'");
            r = parse_vertex(toks[0], 1 << 20, line_no);
            n = parse_vertex(toks[1], 1 << 20, line_no);
            m = parse_vertex(toks[2], 1 << 20, line_no);
            continue;
        }
        if (static_cast<int>(toks.size()) != r)
            fail(line_no, "expected " + std::to_string(r) + " vertex indices");
        std::vector<int> edge;
        for (const auto& t : toks) edge.push_back(parse_vertex(t, n, line_no));
        edges.push_back(std::move(edge));
    }
    if (r < 0) throw std::runtime_error("empty hypergraph file (missing 'r n m' header)");
    if (m >= 0 && static_cast<long>(edges.size()) != m)
        throw std::runtime_error("edge count does not match header");
    return UniformHypergraph(n, r, std::move(edges));
}

UniformHypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_hypergraph(in);
}

std::string write_hypergraph(const UniformHypergraph& h) {
    std::ostringstream os;
    os << h.r << " " << h.n << " " << h.edges.size() << "\n";
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << "\n";
    }
    return os.str();
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    if (std::string(buf) == "-0") return "0";
    return buf;
}

double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace speclim
