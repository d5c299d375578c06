#include <algorithm>
#include <numeric>
#include <vector>

#include "limw/graph.hpp"
#include "limw/layout.hpp"
#include "limw/tree_width.hpp"

namespace limw {

std::vector<PowerProfileRow> power_profile(const Graph& g, int max_m,
                                           const RunConfig& cfg) {
    if (g.n() < 1) throw DomainError("power_profile: empty graph");
    if (max_m < 1) throw DomainError("power_profile: max_m must be >= 1");
    if (connected_components(g).size() != 1)
        throw DomainError("power_profile: graph must be connected");

    int n = g.n();
    int diam_val = diameter(g);
    int hi = std::max(1, std::min(max_m, diam_val));
    bool small = n <= cfg.oracle_cutoff;

    LinearLayout sigma;
    int base_width = 0;
    if (!small) {
        if (is_tree(g)) {
            sigma = construct_tree_layout(g, cfg).first;
        } else {
            sigma.order.resize(n);
            std::iota(sigma.order.begin(), sigma.order.end(), 0);
        }
        base_width = mw_of_layout(g, sigma, cfg.mim_budget).width;
    }

    std::vector<PowerProfileRow> rows;
    rows.reserve(hi);
    for (int m = 1; m <= hi; ++m) {
        PowerProfileRow row;
        row.m = m;
        if (n >= 2 && m == diam_val) {
            // g^diam is complete
            row.lower = row.upper = 1;
            row.exact = true;
        } else if (small) {
            int w = lmw_oracle(graph_power(g, m), cfg).width;
            row.lower = row.upper = w;
            row.exact = true;
        } else {
            int up;
            try {
                up = mw_of_layout(graph_power(g, m), sigma, cfg.mim_budget).width;
            } catch (const ResourceError&) {
                up = 2 * base_width;
            }
            row.lower = 1;
            row.upper = up;
            row.exact = (row.lower == row.upper);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace limw
