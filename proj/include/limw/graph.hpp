#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limw/config.hpp"
#include "limw/vertex_set.hpp"

namespace limw {

// Simple undirected graph on vertex ids 0..n-1.
// No self-loops, no parallel edges. Neighbor lists are kept sorted ascending.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return m_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return int(neighbors(v).size()); }

    // All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    void set_label(int v, const std::string& s);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;  // empty vector when no labels set
};

// Cut graph G[S, V∖S]: same vertex ids as the host, only crossing edges,
// with the two sides recorded.
struct BipartiteGraph {
    Graph graph;
    VertexSet left;
    VertexSet right;
};

// Result of induced_subgraph: compacted ids plus the back-map to host ids.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;  // to_host[new id] = host id, ascending
};

struct RootedTree {
    Graph graph;
    int root = 0;
    std::vector<int> parent;  // parent[root] == root
};

VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed);

// Shortest-path length; nullopt when u and v are in different components.
std::optional<int> distance(const Graph& g, int u, int v);

// Minimum distance between any a ∈ A and b ∈ B. Throws on empty input sets.
std::optional<int> subgraph_distance(const Graph& g, const VertexSet& a,
                                     const VertexSet& b);

int diameter(const Graph& g);

// G^m: edge {u,v} iff 1 <= dist(u,v) <= m. Computed by one BFS per vertex.
Graph graph_power(const Graph& g, int m);

BipartiteGraph bipartite_cut_graph(const Graph& g, const VertexSet& s);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_tree(const Graph& g);

// Orient a tree at the given root, filling the parent map.
RootedTree root_tree(const Graph& tree, int root);

RootedTree rooted_subtree(const RootedTree& t, int v);

}  // namespace limw
