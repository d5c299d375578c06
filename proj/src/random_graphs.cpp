#include "limw/random_graphs.hpp"

#include <algorithm>
#include <numeric>

namespace limw {

Graph prufer_random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw DomainError("prufer_random_tree: n must be >= 1");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = pick(rng);

    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    // Standard decoding: repeatedly join the smallest leaf to the next code entry.
    std::vector<bool> used(n, false);
    for (int x : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v) {
            if (deg[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        }
        used[leaf] = true;
        g.add_edge(std::min(leaf, x), std::max(leaf, x));
        --deg[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (deg[v] == 1 && !used[v]) {
            if (a < 0)
                a = v;
            else
                b = v;
        }
    }
    g.add_edge(a, b);
    return g;
}

Graph gnp_random_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 0) throw DomainError("gnp_random_graph: negative n");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

LinearLayout random_permutation(int n, std::mt19937_64& rng) {
    LinearLayout sigma;
    sigma.order.resize(n);
    std::iota(sigma.order.begin(), sigma.order.end(), 0);
    std::shuffle(sigma.order.begin(), sigma.order.end(), rng);
    return sigma;
}

}  // namespace limw
