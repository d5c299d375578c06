#include "limw/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "mim_core.hpp"

namespace limw {

bool is_induced_matching(const Graph& g, const Matching& m) {
    for (auto [u, v] : m.edges) {
        if (!g.has_edge(u, v))
            throw DomainError("is_induced_matching: edge " + std::to_string(u) + "-" +
                              std::to_string(v) + " not in graph");
    }
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < m.edges.size(); ++j) {
            int a[2] = {m.edges[i].first, m.edges[i].second};
            int b[2] = {m.edges[j].first, m.edges[j].second};
            for (int x : a)
                for (int y : b)
                    if (x == y || g.has_edge(x, y)) return false;
        }
    }
    return true;
}

namespace {

template <int W>
MimResult mim_impl(const Graph& g, std::uint64_t budget, bool want_witness) {
    auto edges = g.edges();  // lexicographic
    const int e = int(edges.size());
    MimResult res;
    if (e == 0) return res;

    std::vector<detail::SmallMask<W>> closed(g.n());
    for (int v = 0; v < g.n(); ++v) {
        closed[v].set(v);
        for (int w : g.neighbors(v)) closed[v].set(w);
    }

    // Branch order: degree sum ascending, lex ties (stable over lex input).
    std::vector<int> order(e);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(edges[a].first) + g.degree(edges[a].second);
        int db = g.degree(edges[b].first) + g.degree(edges[b].second);
        return da < db;
    });
    std::vector<std::pair<int, int>> bends(e);
    std::vector<detail::SmallMask<W>> bkill(e);
    for (int i = 0; i < e; ++i) {
        bends[i] = edges[order[i]];
        bkill[i] = closed[bends[i].first];
        bkill[i] |= closed[bends[i].second];
    }

    auto all = detail::SmallMask<W>::full(g.n());
    detail::MimSearch<W> s{bends.data(), bkill.data(), e, &budget, 0};
    s.best = s.greedy(all);
    s.search(all, 0, 0);
    res.size = s.best;
    if (!want_witness || res.size == 0) return res;

    // Lexicographically smallest witness: commit edges in lex order whenever
    // the remainder is still completable from lex-later edges.
    std::vector<detail::SmallMask<W>> lkill(e);
    for (int i = 0; i < e; ++i) {
        lkill[i] = closed[edges[i].first];
        lkill[i] |= closed[edges[i].second];
    }
    detail::MimSearch<W> d{edges.data(), lkill.data(), e, &budget, 0};
    detail::SmallMask<W> usable = all;
    int need = res.size;
    for (int i = 0; i < e && need > 0; ++i) {
        if (!usable.pair_in(edges[i].first, edges[i].second)) continue;
        detail::SmallMask<W> next = usable;
        next.subtract(lkill[i]);
        if (need == 1 || d.decide(next, i + 1, 0, need - 1)) {
            res.witness.edges.push_back(edges[i]);
            usable = next;
            --need;
        }
    }
    if (need != 0) throw InternalError("mim: witness reconstruction failed");
    return res;
}

MimResult mim_dispatch(const Graph& g, std::uint64_t budget, bool want_witness) {
    if (g.n() <= 64) return mim_impl<1>(g, budget, want_witness);
    if (g.n() <= 128) return mim_impl<2>(g, budget, want_witness);
    if (g.n() <= 256) return mim_impl<4>(g, budget, want_witness);
    if (g.n() <= 512) return mim_impl<8>(g, budget, want_witness);
    throw ResourceError("mim: graphs beyond 512 vertices are not supported");
}

}  // namespace

MimResult mim_exact(const Graph& g, std::uint64_t budget) {
    return mim_dispatch(g, budget, true);
}

int mim_size(const Graph& g, std::uint64_t budget) {
    return mim_dispatch(g, budget, false).size;
}

MimResult mim_exhaustive(const Graph& g) {
    const int n = g.n();
    if (n > 24) throw ResourceError("mim_exhaustive: needs n <= 24");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t(1) << v;
        adj[v] |= std::uint32_t(1) << u;
    }
    MimResult res;
    const std::uint32_t end = n == 0 ? 1 : (std::uint32_t(1) << n);
    for (std::uint32_t s = 0; s < end; ++s) {
        int pc = std::popcount(s);
        if (pc < 2 || pc % 2 != 0 || pc / 2 < res.size) continue;
        bool regular = true;
        for (int v = 0; v < n && regular; ++v)
            if ((s >> v) & 1) regular = std::popcount(adj[v] & s) == 1;
        if (!regular) continue;
        std::vector<std::pair<int, int>> es;
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1)) continue;
            int w = std::countr_zero(adj[v] & s);
            if (v < w) es.emplace_back(v, w);
        }
        int size = pc / 2;
        if (size > res.size || (size == res.size && es < res.witness.edges)) {
            res.size = size;
            res.witness.edges = std::move(es);
        }
    }
    return res;
}

bool is_bipartite_chain(const BipartiteGraph& bg) {
    const Graph& g = bg.graph;
    if (bg.left.universe() != g.n() || bg.right.universe() != g.n())
        throw DomainError("is_bipartite_chain: side universe mismatch");
    if (bg.left.intersects(bg.right) || (bg.left | bg.right) != VertexSet::full(g.n()))
        throw DomainError("is_bipartite_chain: sides must partition the vertices");
    for (auto [u, v] : g.edges())
        if (bg.left.test(u) == bg.left.test(v))
            throw DomainError("is_bipartite_chain: edge " + std::to_string(u) + "-" +
                              std::to_string(v) + " does not cross the bipartition");

    auto lefts = bg.left.to_vector();
    std::stable_sort(lefts.begin(), lefts.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    for (std::size_t i = 0; i + 1 < lefts.size(); ++i) {
        for (int w : g.neighbors(lefts[i]))
            if (!g.has_edge(lefts[i + 1], w)) return false;
    }
    return true;
}

}  // namespace limw
