#include "limw/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace limw {

Graph::Graph(int n) : n_(n), adj_(n >= 0 ? n : 0) {
    if (n < 0) throw DomainError("Graph: negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("Graph: vertex " + std::to_string(v) + " out of range (n=" +
                          std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("Graph: self-loop at " + std::to_string(u));
    if (has_edge(u, v))
        throw DomainError("Graph: duplicate edge " + std::to_string(u) + "-" +
                          std::to_string(v));
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    static const std::string kEmpty;
    return labels_.empty() ? kEmpty : labels_[v];
}

void Graph::set_label(int v, const std::string& s) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(n_);
    labels_[v] = s;
}

namespace {

// BFS distances from a set of sources; -1 marks unreachable vertices.
std::vector<int> bfs_from(const Graph& g, const std::vector<int>& sources) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    for (int s : sources) {
        if (dist[s] != 0) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

}  // namespace

VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed) {
    if (s.universe() != g.n()) throw DomainError("neighborhood: set universe mismatch");
    VertexSet out(g.n());
    for (int v = s.first(); v >= 0; v = s.next(v))
        for (int w : g.neighbors(v)) out.set(w);
    if (closed) {
        out |= s;
    } else {
        out -= s;
    }
    return out;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    g.neighbors(u);  // id validation
    g.neighbors(v);
    auto dist = bfs_from(g, {u});
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

std::optional<int> subgraph_distance(const Graph& g, const VertexSet& a,
                                     const VertexSet& b) {
    if (a.universe() != g.n() || b.universe() != g.n())
        throw DomainError("subgraph_distance: set universe mismatch");
    if (a.empty() || b.empty()) throw DomainError("subgraph_distance: empty set");
    auto dist = bfs_from(g, a.to_vector());
    std::optional<int> best;
    for (int v = b.first(); v >= 0; v = b.next(v)) {
        if (dist[v] >= 0 && (!best || dist[v] < *best)) best = dist[v];
    }
    return best;
}

int diameter(const Graph& g) {
    if (g.n() < 1) throw DomainError("diameter: empty graph");
    int best = 0;
    for (int u = 0; u < g.n(); ++u) {
        auto dist = bfs_from(g, {u});
        for (int v = 0; v < g.n(); ++v) {
            if (dist[v] < 0) throw DomainError("diameter: graph is disconnected");
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

Graph graph_power(const Graph& g, int m) {
    if (m < 1) throw DomainError("graph_power: exponent must be >= 1");
    Graph out(g.n());
    for (int u = 0; u < g.n(); ++u) {
        auto dist = bfs_from(g, {u});
        for (int v = u + 1; v < g.n(); ++v)
            if (dist[v] >= 1 && dist[v] <= m) out.add_edge(u, v);
    }
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v) out.set_label(v, g.label(v));
    return out;
}

BipartiteGraph bipartite_cut_graph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw DomainError("bipartite_cut_graph: universe mismatch");
    if (s.empty() || s.count() == g.n())
        throw DomainError("bipartite_cut_graph: side must be a proper nonempty subset");
    BipartiteGraph out;
    out.graph = Graph(g.n());
    out.left = s;
    out.right = VertexSet::full(g.n()) - s;
    for (auto [u, v] : g.edges())
        if (s.test(u) != s.test(v)) out.graph.add_edge(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw DomainError("induced_subgraph: universe mismatch");
    InducedSubgraph out;
    out.to_host = s.to_vector();
    std::vector<int> to_new(g.n(), -1);
    for (int i = 0; i < int(out.to_host.size()); ++i) to_new[out.to_host[i]] = i;
    out.graph = Graph(int(out.to_host.size()));
    for (int i = 0; i < int(out.to_host.size()); ++i) {
        for (int w : g.neighbors(out.to_host[i])) {
            int j = to_new[w];
            if (j > i) out.graph.add_edge(i, j);
        }
    }
    if (g.has_labels())
        for (int i = 0; i < int(out.to_host.size()); ++i)
            out.graph.set_label(i, g.label(out.to_host[i]));
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.n(), false);
    for (int v = 0; v < g.n(); ++v) {
        if (seen[v]) continue;
        VertexSet comp(g.n());
        std::queue<int> q;
        q.push(v);
        seen[v] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.set(u);
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_tree(const Graph& g) {
    if (g.n() < 1 || g.m() != g.n() - 1) return false;
    return connected_components(g).size() == 1;
}

RootedTree root_tree(const Graph& tree, int root) {
    if (!is_tree(tree)) throw DomainError("root_tree: input is not a tree");
    tree.neighbors(root);
    RootedTree t;
    t.graph = tree;
    t.root = root;
    t.parent.assign(tree.n(), -1);
    t.parent[root] = root;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : tree.neighbors(u)) {
            if (t.parent[v] < 0) {
                t.parent[v] = u;
                q.push(v);
            }
        }
    }
    return t;
}

RootedTree rooted_subtree(const RootedTree& t, int v) {
    t.graph.neighbors(v);
    VertexSet keep(t.graph.n());
    std::queue<int> q;
    q.push(v);
    keep.set(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : t.graph.neighbors(u)) {
            if (t.parent[w] == u && !keep.test(w)) {
                keep.set(w);
                q.push(w);
            }
        }
    }
    auto sub = induced_subgraph(t.graph, keep);
    int new_root = int(std::lower_bound(sub.to_host.begin(), sub.to_host.end(), v) -
                       sub.to_host.begin());
    return root_tree(sub.graph, new_root);
}

}  // namespace limw
