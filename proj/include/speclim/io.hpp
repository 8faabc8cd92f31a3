// io.hpp — text formats for graphs and hypergraphs.
//
// Graph files: header "n <count>", then one edge per line. Edge syntax picks
// the flavor: "u v" plain, "u v +" / "u v -" signed, "u > v" arc and
// "u = v" digon (mixed), "u -> v" oriented. Blank lines and '#' comments are
// ignored. Hypergraph files: header "r n m", then one edge per line as r
// vertex indices.
#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "speclim/graph.hpp"
#include "speclim/hypergraph.hpp"

namespace speclim {

using AnyGraph = std::variant<Graph, SignedGraph, MixedGraph, OrientedGraph>;

// Throws std::runtime_error with the 1-based line number on malformed input.
AnyGraph read_graph(std::istream& in);
AnyGraph read_graph_file(const std::string& path);

std::string write_graph(const Graph& g);
std::string write_graph(const SignedGraph& sg);
std::string write_graph(const MixedGraph& mg);
std::string write_graph(const OrientedGraph& og);

UniformHypergraph read_hypergraph(std::istream& in);
UniformHypergraph read_hypergraph_file(const std::string& path);
std::string write_hypergraph(const UniformHypergraph& h);

// Fixed 12-significant-digit formatting used by every output path, so that
// identical inputs produce byte-identical reports.
std::string format_real(double x);
double round12(double x);

}  // namespace speclim
