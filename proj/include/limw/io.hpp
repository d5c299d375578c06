#pragma once

#include <iosfwd>
#include <string>

#include "limw/graph.hpp"
#include "limw/layout.hpp"

namespace limw {

// Edge-list text format: line 1 "n m", then m lines "u v" with
// 0 <= u < v < n. Lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

// Whitespace-separated permutation of 0..n-1.
LinearLayout read_layout(std::istream& in, int n);
LinearLayout load_layout(const std::string& path, int n);

std::string to_dot(const Graph& g);

}  // namespace limw
