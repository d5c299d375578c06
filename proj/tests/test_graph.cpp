#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "limw/families.hpp"
#include "limw/graph.hpp"
#include "limw/random_graphs.hpp"

namespace {

using namespace limw;

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

VertexSet make_set(int n, const std::vector<int>& ids) {
    VertexSet s(n);
    for (int v : ids) s.set(v);
    return s;
}

// Boolean m-th power of the adjacency matrix with self-loops added.
std::vector<std::vector<bool>> bool_matrix_power(const Graph& g, int m) {
    int n = g.n();
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) {
        a[v][v] = true;
        for (int u : g.neighbors(v)) a[v][u] = true;
    }
    auto cur = a;
    for (int step = 1; step < m; ++step) {
        std::vector<std::vector<bool>> nxt(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (cur[i][k])
                    for (int j = 0; j < n; ++j)
                        if (a[k][j]) nxt[i][j] = true;
        cur = nxt;
    }
    return cur;
}

}  // namespace

TEST_CASE("graph construction rejects malformed edges") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), DomainError);
    CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
    CHECK_THROWS_AS(Graph(-1), DomainError);
    CHECK(g.m() == 1);
}

TEST_CASE("adjacency is symmetric and sorted") {
    Graph g(5, {{3, 4}, {0, 3}, {1, 3}});
    CHECK(g.neighbors(3) == std::vector<int>{0, 1, 4});
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) CHECK(g.has_edge(v, u));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {3, 4}});
}

TEST_CASE("neighborhood open and closed") {
    Graph p3 = path_graph(3);
    CHECK(neighborhood(p3, make_set(3, {1}), true) == make_set(3, {0, 1, 2}));
    CHECK(neighborhood(p3, make_set(3, {}), false).empty());

    Graph l1 = gen_L(1).tree.graph;
    CHECK(neighborhood(l1, make_set(7, {0}), false) == make_set(7, {1, 3, 5}));
}

TEST_CASE("distance and diameter") {
    Graph p4 = path_graph(4);
    CHECK(distance(p4, 0, 3) == 3);
    CHECK(distance(p4, 2, 2) == 0);
    CHECK(!distance(Graph(2), 0, 1).has_value());
    CHECK(diameter(p4) == 3);
    CHECK(diameter(Graph(1)) == 0);

    Graph l1 = gen_L(1).tree.graph;
    CHECK(distance(l1, 2, 4) == 4);
    CHECK(diameter(l1) == 4);
    CHECK_THROWS_AS(diameter(Graph(2)), DomainError);
}

TEST_CASE("subgraph distance") {
    Graph p4 = path_graph(4);
    CHECK(subgraph_distance(p4, make_set(4, {0}), make_set(4, {3})) == 3);
    CHECK(subgraph_distance(p4, make_set(4, {0, 1}), make_set(4, {1, 2})) == 0);
    CHECK_THROWS_AS(subgraph_distance(p4, make_set(4, {}), make_set(4, {1})), DomainError);
}

TEST_CASE("squared triple-branch tree keeps leaf blocks at distance two") {
    Graph h1sq = graph_power(gen_H(1).tree.graph, 2);
    CHECK(subgraph_distance(h1sq, make_set(13, {2, 3, 4}), make_set(13, {6, 7, 8})) == 2);
}

TEST_CASE("graph power follows the distance definition") {
    Graph p3 = path_graph(3);
    Graph k3 = graph_power(p3, 2);
    CHECK(k3.m() == 3);

    Graph l1 = gen_L(1).tree.graph;
    CHECK(graph_power(l1, 1).edges() == l1.edges());
    CHECK(graph_power(l1, 4).m() == 21);
    CHECK_THROWS_AS(graph_power(p3, 0), DomainError);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        Graph g = gnp_random_graph(2 + int(rng() % 11), 0.3, rng);
        int m = 1 + int(rng() % 4);
        Graph gm = graph_power(g, m);
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) {
                auto d = distance(g, u, v);
                CHECK(gm.has_edge(u, v) == (d.has_value() && *d <= m));
            }
    }
}

TEST_CASE("diameter power of a connected graph is complete") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 30; ++it) {
        Graph t = prufer_random_tree(2 + int(rng() % 10), rng);
        Graph power = graph_power(t, diameter(t));
        CHECK(power.m() == t.n() * (t.n() - 1) / 2);
    }
}

TEST_CASE("graph power agrees with the boolean matrix oracle") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 30; ++it) {
        Graph g = gnp_random_graph(2 + int(rng() % 9), 0.35, rng);
        int m = 1 + int(rng() % 4);
        auto mat = bool_matrix_power(g, m);
        Graph gm = graph_power(g, m);
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v) CHECK(gm.has_edge(u, v) == mat[u][v]);
    }
}

TEST_CASE("bipartite cut graph keeps exactly the crossing edges") {
    Graph p4 = path_graph(4);
    BipartiteGraph cut = bipartite_cut_graph(p4, make_set(4, {0, 1}));
    CHECK(cut.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(cut.left == make_set(4, {0, 1}));
    CHECK(cut.right == make_set(4, {2, 3}));

    CHECK(bipartite_cut_graph(complete_graph(4), make_set(4, {0, 1})).graph.m() == 4);
    CHECK(bipartite_cut_graph(p4, make_set(4, {0, 2})).graph.edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    CHECK_THROWS_AS(bipartite_cut_graph(p4, make_set(4, {})), DomainError);
    CHECK_THROWS_AS(bipartite_cut_graph(p4, VertexSet::full(4)), DomainError);

    std::mt19937_64 rng(14);
    for (int it = 0; it < 30; ++it) {
        Graph g = gnp_random_graph(3 + int(rng() % 8), 0.4, rng);
        VertexSet s(g.n());
        s.set(int(rng() % g.n()));
        s.set(int(rng() % g.n()));
        if (s.count() == g.n()) continue;
        int crossing = 0;
        for (auto [u, v] : g.edges()) crossing += s.test(u) != s.test(v);
        CHECK(bipartite_cut_graph(g, s).graph.m() == crossing);
    }
}

TEST_CASE("induced subgraph compacts ids with a back-map") {
    Graph p4 = path_graph(4);
    InducedSubgraph one = induced_subgraph(p4, make_set(4, {0, 1}));
    CHECK(one.graph.m() == 1);
    CHECK(one.to_host == std::vector<int>{0, 1});

    InducedSubgraph two = induced_subgraph(p4, make_set(4, {0, 2}));
    CHECK(two.graph.n() == 2);
    CHECK(two.graph.m() == 0);
}

TEST_CASE("rootless squared triple-branch tree is three cliques on a triangle") {
    Graph h1sq = graph_power(gen_H(1).tree.graph, 2);
    VertexSet keep = VertexSet::full(13);
    keep.reset(0);
    InducedSubgraph sub = induced_subgraph(h1sq, keep);
    CHECK(sub.graph.n() == 12);
    CHECK(sub.graph.m() == 21);
    CHECK(connected_components(sub.graph).size() == 1);

    auto host_edge = [&](int hu, int hv) {
        int lu = int(std::lower_bound(sub.to_host.begin(), sub.to_host.end(), hu) -
                     sub.to_host.begin());
        int lv = int(std::lower_bound(sub.to_host.begin(), sub.to_host.end(), hv) -
                     sub.to_host.begin());
        return sub.graph.has_edge(lu, lv);
    };
    for (int block : {1, 5, 9})
        for (int a = block; a <= block + 3; ++a)
            for (int b = a + 1; b <= block + 3; ++b) CHECK(host_edge(a, b));
    CHECK(host_edge(1, 5));
    CHECK(host_edge(1, 9));
    CHECK(host_edge(5, 9));
}

TEST_CASE("connected components are ordered by smallest member") {
    Graph g(4, {{0, 1}, {2, 3}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == make_set(4, {0, 1}));
    CHECK(comps[1] == make_set(4, {2, 3}));
    CHECK(connected_components(Graph(1)).size() == 1);

    Graph l1 = gen_L(1).tree.graph;
    VertexSet rest = VertexSet::full(7) - neighborhood(l1, make_set(7, {0}), true);
    auto leaves = connected_components(induced_subgraph(l1, rest).graph);
    CHECK(leaves.size() == 3);
    for (const auto& c : leaves) CHECK(c.count() == 1);
}

TEST_CASE("tree recognition and rooting") {
    CHECK(is_tree(path_graph(5)));
    CHECK(!is_tree(complete_graph(3)));
    CHECK(!is_tree(Graph(2)));
    CHECK(is_tree(Graph(1)));

    RootedTree t = root_tree(path_graph(4), 2);
    CHECK(t.root == 2);
    CHECK(t.parent[2] == 2);
    CHECK(t.parent[1] == 2);
    CHECK(t.parent[0] == 1);
    CHECK(t.parent[3] == 2);
    CHECK_THROWS_AS(root_tree(complete_graph(3), 0), DomainError);
}

TEST_CASE("rooted subtree extraction") {
    FamilyInstance l1 = gen_L(1);
    RootedTree whole = rooted_subtree(l1.tree, 0);
    CHECK(whole.graph.n() == 7);

    RootedTree branch = rooted_subtree(l1.tree, 1);
    CHECK(branch.graph.n() == 2);
    CHECK(branch.graph.m() == 1);

    FamilyInstance h1 = gen_H(1);
    RootedTree star = rooted_subtree(h1.tree, 1);
    CHECK(star.graph.n() == 4);
    CHECK(star.graph.m() == 3);
    CHECK(star.graph.degree(star.root) == 3);
}

TEST_CASE("vertex set primitives") {
    VertexSet s(70);
    s.set(0);
    s.set(69);
    CHECK(s.count() == 2);
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 69);
    CHECK(s.next(69) == -1);
    CHECK(s.to_vector() == std::vector<int>{0, 69});
    CHECK_THROWS_AS(s.set(70), DomainError);
    CHECK_THROWS_AS(s.intersects(VertexSet(3)), DomainError);

    VertexSet t(70);
    t.set(69);
    CHECK(t.is_subset_of(s));
    CHECK(s.intersects(t));
    CHECK((s - t).to_vector() == std::vector<int>{0});
}
