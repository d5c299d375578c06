#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "limw/config.hpp"
#include "limw/graph.hpp"
#include "limw/matching.hpp"

namespace limw {

// Total order on the vertices; order[i] is the vertex at position i+1.
struct LinearLayout {
    std::vector<int> order;
};

bool is_valid_layout(const Graph& g, const LinearLayout& sigma);
LinearLayout reversed(const LinearLayout& sigma);

struct Cut {
    int index = 0;   // 1 <= index < n
    VertexSet left;  // first `index` vertices of the layout
};

// The n-1 prefix cuts in index order; empty when n < 2.
std::vector<Cut> cuts(const Graph& g, const LinearLayout& sigma);

struct WidthReport {
    LinearLayout layout;
    std::vector<int> cut_values;         // mim of each cut graph, n-1 entries
    int width = 0;                       // max cut value, 0 when n <= 1
    std::vector<Matching> witnesses;     // per cut; filled only where max is hit
};

WidthReport mw_of_layout(const Graph& g, const LinearLayout& sigma,
                         std::uint64_t mim_budget = RunConfig{}.mim_budget);

struct LmwResult {
    int width = 0;
    LinearLayout layout;
};

// Exact linear MIM-width by DP over vertex subsets:
//   f(S) = max(mim(G[S, V∖S]), min over v in S of f(S∖{v})),  f(∅) = 0,
// with the cut term dropped at S = V. Layout recovered by backtracking,
// smallest minimizing vertex first. Requires n <= cfg.oracle_cutoff.
LmwResult lmw_oracle(const Graph& g, const RunConfig& cfg = {});

// (mw(σ,g), mw(σ,g^m)). The second never exceeds twice the first; that is
// asserted here because a violation means a solver bug.
std::pair<int, int> power_layout_bound(const Graph& g, const LinearLayout& sigma,
                                       int m,
                                       std::uint64_t mim_budget = RunConfig{}.mim_budget);

struct PowerProfileRow {
    int m = 0;
    int lower = 0;
    int upper = 0;
    bool exact = false;
};

// lmw bounds of g^m for m = 1..min(max_m, diam(g)), exact via the oracle
// when the graph fits under the cutoff. The m = diam row is exact width 1
// for n >= 2 (the power is complete). Always emits at least the m = 1 row.
std::vector<PowerProfileRow> power_profile(const Graph& g, int max_m,
                                           const RunConfig& cfg = {});

// {"width": w, "cut_values": [...], "witness_edges": [[[u,v],...], ...]}
std::string width_report_to_json(const WidthReport& report);

}  // namespace limw
