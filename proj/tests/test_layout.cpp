#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "limw/families.hpp"
#include "limw/graph.hpp"
#include "limw/layout.hpp"
#include "limw/matching.hpp"
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

LinearLayout identity_layout(int n) {
    LinearLayout sigma;
    sigma.order.resize(n);
    std::iota(sigma.order.begin(), sigma.order.end(), 0);
    return sigma;
}

// Smallest width over every permutation, with per-prefix mim cached by
// bitmask. Only usable for n <= 8.
int brute_min_width(const Graph& g) {
    int n = g.n();
    if (n <= 1) return 0;
    std::vector<int> cache(std::size_t(1) << n, -1);
    auto cut_value = [&](unsigned mask) {
        if (cache[mask] < 0)
            cache[mask] = mim_size(bipartite_cut_graph(g, [&] {
                                       VertexSet s(n);
                                       for (int v = 0; v < n; ++v)
                                           if ((mask >> v) & 1) s.set(v);
                                       return s;
                                   }())
                                       .graph);
        return cache[mask];
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = INT_MAX;
    do {
        unsigned mask = 0;
        int width = 0;
        for (int i = 0; i + 1 < n && width < best; ++i) {
            mask |= 1u << perm[i];
            width = std::max(width, cut_value(mask));
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()) && best > 0);
    return best;
}

}  // namespace

TEST_CASE("layout validation and reversal") {
    Graph p4 = path_graph(4);
    CHECK(is_valid_layout(p4, identity_layout(4)));
    CHECK(!is_valid_layout(p4, LinearLayout{{0, 1, 2}}));
    CHECK(!is_valid_layout(p4, LinearLayout{{0, 1, 2, 2}}));
    CHECK(reversed(identity_layout(3)).order == std::vector<int>{2, 1, 0});
}

TEST_CASE("prefix cuts in index order") {
    Graph p3 = path_graph(3);
    auto cs = cuts(p3, identity_layout(3));
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].index == 1);
    CHECK(cs[0].left.to_vector() == std::vector<int>{0});
    CHECK(cs[1].left.to_vector() == std::vector<int>{0, 1});

    CHECK(cuts(Graph(1), identity_layout(1)).empty());

    auto cs4 = cuts(path_graph(4), LinearLayout{{0, 2, 1, 3}});
    REQUIRE(cs4.size() == 3);
    CHECK(cs4[1].left.to_vector() == std::vector<int>{0, 2});
    CHECK(cs4[2].left.to_vector() == std::vector<int>{0, 1, 2});
}

TEST_CASE("width of fixed layouts") {
    WidthReport rep = mw_of_layout(path_graph(4), identity_layout(4));
    CHECK(rep.width == 1);
    CHECK(rep.cut_values == std::vector<int>{1, 1, 1});

    CHECK(mw_of_layout(complete_graph(5), identity_layout(5)).width == 1);
    CHECK(mw_of_layout(Graph(1), identity_layout(1)).width == 0);

    Graph l1sq = graph_power(gen_L(1).tree.graph, 2);
    CHECK(mw_of_layout(l1sq, LinearLayout{{0, 2, 1, 4, 3, 6, 5}}).width == 1);
    CHECK(mw_of_layout(l1sq, l_square_layout(1)).width == 1);
}

TEST_CASE("width report witnesses validate on their cuts") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 25; ++it) {
        Graph g = gnp_random_graph(2 + int(rng() % 9), 0.4, rng);
        LinearLayout sigma = random_permutation(g.n(), rng);
        WidthReport rep = mw_of_layout(g, sigma);
        auto cs = cuts(g, sigma);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (rep.witnesses[i].edges.empty()) continue;
            CHECK(rep.cut_values[i] == rep.width);
            CHECK(is_induced_matching(bipartite_cut_graph(g, cs[i].left).graph,
                                      rep.witnesses[i]));
        }
    }
}

TEST_CASE("layout reversal preserves width") {
    std::mt19937_64 rng(32);
    for (int it = 0; it < 25; ++it) {
        Graph g = gnp_random_graph(2 + int(rng() % 9), 0.4, rng);
        LinearLayout sigma = random_permutation(g.n(), rng);
        CHECK(mw_of_layout(g, sigma).width == mw_of_layout(g, reversed(sigma)).width);
    }
}

TEST_CASE("subset oracle on fixed graphs") {
    CHECK(lmw_oracle(Graph(1)).width == 0);
    CHECK(lmw_oracle(gen_L(1).tree.graph).width == 1);
    CHECK(lmw_oracle(graph_power(gen_H(1).tree.graph, 2)).width == 2);

    LmwResult res = lmw_oracle(path_graph(6));
    CHECK(res.width == 1);
    CHECK(mw_of_layout(path_graph(6), res.layout).width == 1);
}

TEST_CASE("oracle cutoff raises a resource error naming the cutoff") {
    Graph big(25);
    try {
        lmw_oracle(big);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("20") != std::string::npos);
    }
    RunConfig cfg;
    cfg.oracle_cutoff = 30;
    CHECK_THROWS_AS(lmw_oracle(big, cfg), ResourceError);
}

TEST_CASE("oracle layout is optimal and achieves the reported width") {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 300; ++it) {
        int n = 2 + int(rng() % 7);
        double p = 0.15 + 0.7 * (double(rng() % 100) / 100.0);
        Graph g = gnp_random_graph(n, p, rng);
        LmwResult res = lmw_oracle(g);
        CHECK(mw_of_layout(g, res.layout).width == res.width);
        CHECK(brute_min_width(g) == res.width);
    }
}

TEST_CASE("oracle width is monotone under induced subgraphs") {
    std::mt19937_64 rng(34);
    for (int it = 0; it < 30; ++it) {
        Graph g = gnp_random_graph(3 + int(rng() % 10), 0.35, rng);
        VertexSet s(g.n());
        for (int v = 0; v < g.n(); ++v)
            if (rng() % 2) s.set(v);
        CHECK(lmw_oracle(induced_subgraph(g, s).graph).width <= lmw_oracle(g).width);
    }
}

TEST_CASE("disconnected graphs are handled by the oracle") {
    Graph two_paths(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(lmw_oracle(two_paths).width == 1);
    CHECK(lmw_oracle(Graph(3)).width == 0);
}

TEST_CASE("power of a layout stays within the doubling bound") {
    Graph p4 = path_graph(4);
    CHECK(power_layout_bound(p4, identity_layout(4), 2) == std::pair<int, int>{1, 1});

    std::mt19937_64 rng(35);
    for (int it = 0; it < 20; ++it) {
        Graph g = gnp_random_graph(2 + int(rng() % 8), 0.4, rng);
        LinearLayout sigma = random_permutation(g.n(), rng);
        auto [base, powered] = power_layout_bound(g, sigma, 1);
        CHECK(base == powered);
    }

    auto [one, two] = power_layout_bound(gen_H(1).tree.graph, h_tree_layout(1), 2);
    CHECK(one == 1);
    CHECK(two == 2);
}

TEST_CASE("power profile rows") {
    auto k1 = power_profile(Graph(1), 5);
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].m == 1);
    CHECK(k1[0].lower == 0);
    CHECK(k1[0].upper == 0);
    CHECK(k1[0].exact);

    auto l1 = power_profile(gen_L(1).tree.graph, 4);
    REQUIRE(l1.size() == 4);
    CHECK(l1[1].m == 2);
    CHECK(l1[1].exact);
    CHECK(l1[1].upper == 1);
    CHECK(l1[3].m == 4);
    CHECK(l1[3].exact);
    CHECK(l1[3].upper == 1);

    CHECK(power_profile(path_graph(3), 9).size() == 2);
    CHECK_THROWS_AS(power_profile(Graph(2), 3), DomainError);
}

TEST_CASE("width report serializes with fixed field names") {
    std::string json = width_report_to_json(mw_of_layout(path_graph(3), identity_layout(3)));
    CHECK(json.find("\"width\"") != std::string::npos);
    CHECK(json.find("\"cut_values\"") != std::string::npos);
    CHECK(json.find("\"witness_edges\"") != std::string::npos);
}
