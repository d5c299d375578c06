#include "limw/layout.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "json.hpp"
#include "mim_core.hpp"

namespace limw {

bool is_valid_layout(const Graph& g, const LinearLayout& sigma) {
    if (int(sigma.order.size()) != g.n()) return false;
    std::vector<bool> seen(g.n(), false);
    for (int v : sigma.order) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

namespace {

void require_layout(const Graph& g, const LinearLayout& sigma) {
    if (!is_valid_layout(g, sigma))
        throw DomainError("layout is not a permutation of the graph's vertices");
}

}  // namespace

LinearLayout reversed(const LinearLayout& sigma) {
    LinearLayout out = sigma;
    std::reverse(out.order.begin(), out.order.end());
    return out;
}

std::vector<Cut> cuts(const Graph& g, const LinearLayout& sigma) {
    require_layout(g, sigma);
    std::vector<Cut> out;
    if (g.n() < 2) return out;
    VertexSet left(g.n());
    for (int i = 1; i < g.n(); ++i) {
        left.set(sigma.order[i - 1]);
        out.push_back(Cut{i, left});
    }
    return out;
}

WidthReport mw_of_layout(const Graph& g, const LinearLayout& sigma,
                         std::uint64_t mim_budget) {
    require_layout(g, sigma);
    WidthReport r;
    r.layout = sigma;
    if (g.n() < 2) return r;
    auto cs = cuts(g, sigma);
    std::vector<BipartiteGraph> cut_graphs;
    cut_graphs.reserve(cs.size());
    for (const auto& c : cs) {
        cut_graphs.push_back(bipartite_cut_graph(g, c.left));
        r.cut_values.push_back(mim_size(cut_graphs.back().graph, mim_budget));
    }
    r.width = *std::max_element(r.cut_values.begin(), r.cut_values.end());
    r.witnesses.assign(cs.size(), Matching{});
    if (r.width > 0) {
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (r.cut_values[i] == r.width)
                r.witnesses[i] = mim_exact(cut_graphs[i].graph, mim_budget).witness;
    }
    return r;
}

namespace {

// Exact MIM of the cut graph G[S, V∖S] on a <= 24 vertex host, masks only.
struct CutMimSolver {
    int n = 0;
    std::uint64_t full = 0;
    std::uint64_t mim_budget = 0;
    std::vector<std::pair<int, int>> edges;       // static branch order
    std::vector<std::uint64_t> adj;               // per vertex
    std::vector<std::pair<int, int>> cand;        // scratch
    std::vector<detail::SmallMask<1>> kill;       // scratch

    explicit CutMimSolver(const Graph& g, std::uint64_t budget)
        : n(g.n()), mim_budget(budget), adj(g.n(), 0) {
        full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
        for (auto [u, v] : g.edges()) {
            adj[u] |= std::uint64_t(1) << v;
            adj[v] |= std::uint64_t(1) << u;
        }
        edges = g.edges();
        std::stable_sort(edges.begin(), edges.end(),
                         [&](const auto& a, const auto& b) {
                             return std::popcount(adj[a.first]) + std::popcount(adj[a.second]) <
                                    std::popcount(adj[b.first]) + std::popcount(adj[b.second]);
                         });
        cand.resize(edges.size());
        kill.resize(edges.size());
    }

    int solve(std::uint64_t s) {
        int e = 0;
        for (auto [u, v] : edges) {
            bool su = (s >> u) & 1, sv = (s >> v) & 1;
            if (su == sv) continue;
            cand[e] = {u, v};
            std::uint64_t other_u = su ? ~s & full : s;
            std::uint64_t other_v = sv ? ~s & full : s;
            kill[e].w[0] = (std::uint64_t(1) << u) | (std::uint64_t(1) << v) |
                           (adj[u] & other_u) | (adj[v] & other_v);
            ++e;
        }
        if (e == 0) return 0;
        std::uint64_t budget = mim_budget;
        detail::MimSearch<1> search{cand.data(), kill.data(), e, &budget, 0};
        detail::SmallMask<1> all;
        all.w[0] = full;
        search.best = search.greedy(all);
        search.search(all, 0, 0);
        return search.best;
    }
};

}  // namespace

LmwResult lmw_oracle(const Graph& g, const RunConfig& cfg) {
    const int n = g.n();
    if (cfg.oracle_cutoff < 1) throw DomainError("lmw_oracle: cutoff must be >= 1");
    const int cap = std::min(cfg.oracle_cutoff, kOracleHardCap);
    if (n > cap)
        throw ResourceError("lmw_oracle: n=" + std::to_string(n) + " exceeds cutoff " +
                            std::to_string(cap));
    LmwResult res;
    if (n == 0) return res;
    if (n == 1) {
        res.layout.order = {0};
        return res;
    }

    CutMimSolver cut_mim(g, cfg.mim_budget);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::vector<std::uint8_t> f(std::size_t(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int cut = s == full ? 0 : cut_mim.solve(s);
        int best = 255;
        for (std::uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            best = std::min(best, int(f[s ^ (std::uint32_t(1) << v)]));
        }
        f[s] = std::uint8_t(std::max(cut, best));
    }

    res.width = f[full];
    res.layout.order.assign(n, -1);
    std::uint32_t s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        int arg = -1, best = 256;
        for (std::uint32_t rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (f[s ^ (std::uint32_t(1) << v)] < best) {
                best = f[s ^ (std::uint32_t(1) << v)];
                arg = v;
            }
        }
        res.layout.order[pos] = arg;
        s ^= std::uint32_t(1) << arg;
    }
    return res;
}

std::pair<int, int> power_layout_bound(const Graph& g, const LinearLayout& sigma,
                                       int m, std::uint64_t mim_budget) {
    int base = mw_of_layout(g, sigma, mim_budget).width;
    int powered = mw_of_layout(graph_power(g, m), sigma, mim_budget).width;
    if (powered > 2 * base)
        throw InternalError("power_layout_bound: doubling bound violated (" +
                            std::to_string(powered) + " > 2*" + std::to_string(base) + ")");
    return {base, powered};
}

std::string width_report_to_json(const WidthReport& report) {
    nlohmann::json j;
    j["width"] = report.width;
    j["cut_values"] = report.cut_values;
    auto witness_edges = nlohmann::json::array();
    for (const auto& w : report.witnesses) {
        auto edges = nlohmann::json::array();
        for (auto [u, v] : w.edges) edges.push_back({u, v});
        witness_edges.push_back(std::move(edges));
    }
    j["witness_edges"] = std::move(witness_edges);
    return j.dump(2);
}

}  // namespace limw
