#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "limw/config.hpp"
#include "limw/graph.hpp"

namespace limw {

// Edge set within a host graph; normalized to (u,v) with u < v, sorted.
struct Matching {
    std::vector<std::pair<int, int>> edges;
};

struct MimResult {
    int size = 0;
    Matching witness;
};

// True iff the endpoints of m induce exactly the matching edges in g:
// no shared endpoints, and no host edge between endpoints of distinct
// matching edges. Throws if some edge of m is not an edge of g.
bool is_induced_matching(const Graph& g, const Matching& m);

// Exact maximum induced matching by branch and bound over edges.
// Witness is the lexicographically smallest maximum one.
MimResult mim_exact(const Graph& g, std::uint64_t budget = RunConfig{}.mim_budget);

// Value-only variant (skips witness reconstruction).
int mim_size(const Graph& g, std::uint64_t budget = RunConfig{}.mim_budget);

// Test oracle: enumerate vertex subsets inducing a perfect matching. n <= 24.
MimResult mim_exhaustive(const Graph& g);

// One side's neighborhoods totally ordered by inclusion.
// Throws if some edge of g has both ends on the same recorded side.
bool is_bipartite_chain(const BipartiteGraph& g);

}  // namespace limw
