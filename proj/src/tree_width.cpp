#include "limw/tree_width.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "limw/vertex_set.hpp"

namespace limw {

namespace {

// One unit per solved shape; guards pathological inputs, not normal runs.
constexpr std::uint64_t kShapeWorkBudget = 4'000'000;

struct Bounds {
    int ge = 0;        // width known to be >= ge
    int lt = INT_MAX;  // width known to be < lt
};

}  // namespace

struct DirectedSubtreeTable::Impl {
    Graph host;
    int n = 0;
    std::vector<std::pair<int, int>> edge_list;             // (u,v) with u < v
    std::vector<std::vector<std::pair<int, int>>> adj_eid;  // (neighbor, edge id)
    // side_bits[2e] = component of T minus edge e containing edge_list[e].second,
    // side_bits[2e+1] = the one containing edge_list[e].first.
    std::vector<VertexSet> side_bits;
    std::vector<int> side_width;
    std::unordered_map<VertexSet, int, VertexSet::Hash> side_index;
    std::unordered_map<VertexSet, Bounds, VertexSet::Hash> memo;
    std::vector<long long> min_size;  // least vertex count admitting width >= k
    std::uint64_t work_left = kShapeWorkBudget;
    int full_width = 0;

    explicit Impl(const Graph& tree);

    int dir_index(int v, int u) const;
    bool shape_ge(const VertexSet& s, long long cnt, int k);
    int shape_width(const VertexSet& s);
    void solve_sides();
    void solve_full();
};

DirectedSubtreeTable::Impl::Impl(const Graph& tree) : host(tree), n(tree.n()) {
    if (!is_tree(host)) throw DomainError("DirectedSubtreeTable: host is not a tree");
    edge_list = host.edges();
    adj_eid.assign(n, {});
    for (int e = 0; e < int(edge_list.size()); ++e) {
        auto [u, v] = edge_list[e];
        adj_eid[u].push_back({v, e});
        adj_eid[v].push_back({u, e});
    }
    for (auto& lst : adj_eid) std::sort(lst.begin(), lst.end());

    min_size = {1, 2};
    while (min_size.back() <= n) min_size.push_back(4 + 3 * min_size.back());

    solve_sides();
    solve_full();
}

void DirectedSubtreeTable::Impl::solve_sides() {
    if (n < 2) return;

    // Preorder from 0; each subtree occupies a contiguous preorder interval.
    std::vector<int> parent(n, 0), pre, tin(n, 0), sz(n, 1);
    pre.reserve(n);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        tin[x] = int(pre.size());
        pre.push_back(x);
        for (auto [nb, e] : adj_eid[x]) {
            if (!seen[nb]) {
                seen[nb] = 1;
                parent[nb] = x;
                stack.push_back(nb);
            }
        }
    }
    for (int i = n - 1; i >= 1; --i) sz[parent[pre[i]]] += sz[pre[i]];

    side_bits.assign(2 * edge_list.size(), VertexSet(n));
    side_width.assign(2 * edge_list.size(), -1);
    for (int e = 0; e < int(edge_list.size()); ++e) {
        auto [a, b] = edge_list[e];
        int child = (parent[a] == b) ? a : b;
        VertexSet down(n);
        for (int i = tin[child]; i < tin[child] + sz[child]; ++i) down.set(pre[i]);
        VertexSet up = VertexSet::full(n);
        up -= down;
        side_bits[2 * e + (child == b ? 0 : 1)] = std::move(down);
        side_bits[2 * e + (child == b ? 1 : 0)] = std::move(up);
    }
    for (int i = 0; i < int(side_bits.size()); ++i) side_index.emplace(side_bits[i], i);

    // Smallest sides first so larger shapes resolve against solved pieces.
    std::vector<long long> cnts(side_bits.size());
    for (int i = 0; i < int(side_bits.size()); ++i) cnts[i] = side_bits[i].count();
    std::vector<int> order(side_bits.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cnts[a] < cnts[b]; });
    for (int idx : order)
        if (side_width[idx] < 0) side_width[idx] = shape_width(side_bits[idx]);
}

void DirectedSubtreeTable::Impl::solve_full() {
    full_width = (n >= 2) ? 1 : 0;
    std::vector<int> best;
    for (int x = 0; x < n; ++x) {
        if (int(adj_eid[x].size()) < 3) continue;
        best.clear();
        for (auto [v, e] : adj_eid[x]) {
            int nv = 0;
            for (auto [u, e2] : adj_eid[v]) {
                if (u == x) continue;
                nv = std::max(nv, side_width[2 * e2 + (edge_list[e2].second == u ? 0 : 1)]);
            }
            best.push_back(nv);
        }
        std::nth_element(best.begin(), best.begin() + 2, best.end(), std::greater<int>());
        full_width = std::max(full_width, 1 + best[2]);
    }
}

int DirectedSubtreeTable::Impl::dir_index(int v, int u) const {
    if (v < 0 || v >= n || u < 0 || u >= n)
        throw DomainError("DirectedSubtreeTable: vertex out of range");
    const auto& lst = adj_eid[v];
    auto it = std::lower_bound(lst.begin(), lst.end(), std::pair<int, int>{u, -1});
    if (it == lst.end() || it->first != u)
        throw DomainError("DirectedSubtreeTable: vu is not an edge");
    int e = it->second;
    return 2 * e + (edge_list[e].second == u ? 0 : 1);
}

int DirectedSubtreeTable::Impl::shape_width(const VertexSet& s) {
    long long cnt = s.count();
    int w = 0;
    while (shape_ge(s, cnt, w + 1)) ++w;
    return w;
}

// Width of the (connected) induced shape is >= k iff some vertex of the shape
// has three neighbors v, each with a neighbor u whose detached piece keeps
// width >= k-1; pieces are shape ∩ side. Width >= 1 just needs an edge.
bool DirectedSubtreeTable::Impl::shape_ge(const VertexSet& s, long long cnt, int k) {
    if (k <= 0) return true;
    if (k == 1) return cnt >= 2;
    if (k >= int(min_size.size()) || cnt < min_size[k]) return false;
    if (auto it = side_index.find(s); it != side_index.end() && side_width[it->second] >= 0)
        return side_width[it->second] >= k;
    if (auto it = memo.find(s); it != memo.end()) {
        if (k <= it->second.ge) return true;
        if (k >= it->second.lt) return false;
    }
    if (work_left == 0) throw ResourceError("tree width solver: shape budget exhausted");
    --work_left;

    bool ok = false;
    for (int x = s.first(); x >= 0 && !ok; x = s.next(x)) {
        int deg_in = 0;
        for (auto [v, e] : adj_eid[x])
            if (s.test(v)) ++deg_in;
        if (deg_in < 3) continue;
        int hits = 0;
        for (auto [v, e] : adj_eid[x]) {
            if (!s.test(v)) continue;
            bool good = false;
            for (auto [u, e2] : adj_eid[v]) {
                if (u == x || !s.test(u)) continue;
                VertexSet piece = s;
                piece &= side_bits[2 * e2 + (edge_list[e2].second == u ? 0 : 1)];
                if (shape_ge(piece, piece.count(), k - 1)) {
                    good = true;
                    break;
                }
            }
            if (good && ++hits >= 3) {
                ok = true;
                break;
            }
        }
    }
    Bounds& b = memo[s];
    if (ok)
        b.ge = std::max(b.ge, k);
    else
        b.lt = std::min(b.lt, k);
    return ok;
}

DirectedSubtreeTable::DirectedSubtreeTable(const Graph& tree)
    : impl_(std::make_unique<Impl>(tree)) {}

DirectedSubtreeTable::~DirectedSubtreeTable() = default;
DirectedSubtreeTable::DirectedSubtreeTable(DirectedSubtreeTable&&) noexcept = default;
DirectedSubtreeTable& DirectedSubtreeTable::operator=(DirectedSubtreeTable&&) noexcept = default;

const Graph& DirectedSubtreeTable::host() const { return impl_->host; }

int DirectedSubtreeTable::host_width() const { return impl_->full_width; }

int DirectedSubtreeTable::width_toward(int v, int u) const {
    return impl_->side_width[impl_->dir_index(v, u)];
}

const VertexSet& DirectedSubtreeTable::side(int v, int u) const {
    return impl_->side_bits[impl_->dir_index(v, u)];
}

VertexSet k_neighbors(const Graph& t, int x, int k, const DirectedSubtreeTable& table) {
    if (k < 1) throw DomainError("k_neighbors: k must be >= 1");
    const Graph& h = table.host();
    if (t.n() != h.n() || t.m() != h.m() || t.edges() != h.edges())
        throw DomainError("k_neighbors: table built for a different tree");
    if (x < 0 || x >= t.n()) throw DomainError("k_neighbors: vertex out of range");
    VertexSet out(t.n());
    for (int v : t.neighbors(x)) {
        for (int u : t.neighbors(v)) {
            if (u == x) continue;
            if (table.width_toward(v, u) >= k) {
                out.set(v);
                break;
            }
        }
    }
    return out;
}

int tree_lmw(const Graph& t) { return DirectedSubtreeTable(t).host_width(); }

namespace {

bool path_qualifies(const Graph& t, const DirectedSubtreeTable& table,
                    const std::vector<int>& path, int k) {
    int n = t.n();
    VertexSet pset(n);
    for (int v : path) pset.set(v);
    VertexSet np = neighborhood(t, pset, true);
    for (int y = np.first(); y >= 0; y = np.next(y)) {
        if (pset.test(y)) continue;
        for (int c : t.neighbors(y)) {
            if (np.test(c)) continue;
            if (table.width_toward(y, c) > k) return false;
        }
    }
    return true;
}

std::vector<int> good_path_impl(const Graph& t, const DirectedSubtreeTable& table, int k) {
    int n = t.n();
    if (n == 1) return {0};
    if (n > 2000) throw ResourceError("find_good_path: needs n <= 2000");

    std::vector<std::vector<std::uint16_t>> dist(n);
    std::vector<int> queue(n);
    for (int a = 0; a < n; ++a) {
        auto& row = dist[a];
        row.assign(n, std::uint16_t(n));
        row[a] = 0;
        int head = 0, tail = 0;
        queue[tail++] = a;
        while (head < tail) {
            int x = queue[head++];
            for (int y : t.neighbors(x)) {
                if (row[y] == std::uint16_t(n)) {
                    row[y] = std::uint16_t(row[x] + 1);
                    queue[tail++] = y;
                }
            }
        }
    }

    int diam_val = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) diam_val = std::max(diam_val, int(dist[a][b]));
    std::vector<std::vector<std::pair<int, int>>> buckets(diam_val + 1);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) buckets[dist[a][b]].push_back({a, b});

    std::unordered_map<int, std::vector<int>> parent_cache;
    auto parents_from = [&](int a) -> const std::vector<int>& {
        auto it = parent_cache.find(a);
        if (it != parent_cache.end()) return it->second;
        std::vector<int> par(n, -1);
        par[a] = a;
        int head = 0, tail = 0;
        queue[tail++] = a;
        while (head < tail) {
            int x = queue[head++];
            for (int y : t.neighbors(x)) {
                if (par[y] < 0) {
                    par[y] = x;
                    queue[tail++] = y;
                }
            }
        }
        return parent_cache.emplace(a, std::move(par)).first->second;
    };

    for (const auto& bucket : buckets) {
        for (auto [a, b] : bucket) {
            std::vector<int> path;
            if (a == b) {
                path = {a};
            } else {
                const auto& par = parents_from(a);
                for (int x = b; x != a; x = par[x]) path.push_back(x);
                path.push_back(a);
                std::reverse(path.begin(), path.end());
            }
            if (path_qualifies(t, table, path, k)) return path;
        }
    }
    throw InternalError("find_good_path: no qualifying path");
}

LinearLayout layout_rec(const Graph& t, const RunConfig& cfg);

// Path first vertex, then per path vertex its hanging subtrees: components in
// front of each off-path neighbor v (recursively laid out), then v itself.
LinearLayout stitched(const Graph& t, const DirectedSubtreeTable& table, int total,
                      const RunConfig& cfg) {
    int n = t.n();
    std::vector<int> path = good_path_impl(t, table, total - 1);
    VertexSet pset(n);
    for (int v : path) pset.set(v);
    VertexSet np = neighborhood(t, pset, true);
    std::vector<int> order;
    order.reserve(n);
    for (int x : path) {
        order.push_back(x);
        for (int v : t.neighbors(x)) {
            if (pset.test(v)) continue;
            std::vector<std::pair<int, const VertexSet*>> comps;
            for (int c : t.neighbors(v)) {
                if (np.test(c)) continue;
                const VertexSet& side = table.side(v, c);
                comps.push_back({side.first(), &side});
            }
            std::sort(comps.begin(), comps.end());
            for (auto& [mn, side] : comps) {
                InducedSubgraph sub = induced_subgraph(t, *side);
                LinearLayout inner = layout_rec(sub.graph, cfg);
                for (int idx : inner.order) order.push_back(sub.to_host[idx]);
            }
            order.push_back(v);
        }
    }
    return {order};
}

LinearLayout layout_rec(const Graph& t, const RunConfig& cfg) {
    int n = t.n();
    if (n <= 2) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        return {id};
    }
    DirectedSubtreeTable table(t);
    int total = table.host_width();
    LinearLayout cand = stitched(t, table, total, cfg);
    if (mw_of_layout(t, cand, cfg.mim_budget).width == total) return cand;
    if (n <= cfg.oracle_cutoff) return lmw_oracle(t, cfg).layout;
    throw ResourceError(
        "construct_tree_layout: stitched layout missed the target width and the "
        "component exceeds the oracle cutoff");
}

}  // namespace

std::vector<int> find_good_path(const Graph& t, int k) {
    if (!is_tree(t)) throw DomainError("find_good_path: input is not a tree");
    DirectedSubtreeTable table(t);
    return good_path_impl(t, table, k);
}

std::pair<LinearLayout, WidthReport> construct_tree_layout(const Graph& t,
                                                           const RunConfig& cfg) {
    if (!is_tree(t)) throw DomainError("construct_tree_layout: input is not a tree");
    LinearLayout lay = layout_rec(t, cfg);
    WidthReport rep = mw_of_layout(t, lay, cfg.mim_budget);
    int want = tree_lmw(t);
    if (rep.width != want)
        throw InternalError("construct_tree_layout: layout width " +
                            std::to_string(rep.width) + " != tree width " +
                            std::to_string(want));
    return {lay, rep};
}

}  // namespace limw
