#pragma once

#include <memory>
#include <vector>

#include "limw/config.hpp"
#include "limw/graph.hpp"
#include "limw/layout.hpp"

namespace limw {

// Per-directed-edge subtree widths of a tree: for each edge vu, the exact
// linear MIM-width of the component of T∖vu containing u.
class DirectedSubtreeTable {
public:
    explicit DirectedSubtreeTable(const Graph& tree);
    ~DirectedSubtreeTable();
    DirectedSubtreeTable(DirectedSubtreeTable&&) noexcept;
    DirectedSubtreeTable& operator=(DirectedSubtreeTable&&) noexcept;

    const Graph& host() const;

    // Exact linear MIM-width of the whole host tree.
    int host_width() const;

    // Width of the component of T∖vu containing u. Requires vu an edge.
    int width_toward(int v, int u) const;

    // Vertex set of that component.
    const VertexSet& side(int v, int u) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Neighbors v of x having some neighbor u != x with width_toward(v,u) >= k.
// Defined for k >= 1.
VertexSet k_neighbors(const Graph& t, int x, int k, const DirectedSubtreeTable& table);

// Exact linear MIM-width of a tree: 0 if edgeless, otherwise
// 1 + max{k >= 1 : some node has three k-neighbors}, the max of an empty
// set being 0.
int tree_lmw(const Graph& t);

// A path P with every component of T∖N[P] of width <= k. Candidates are
// scanned by (path length, endpoints) ascending; shortest qualifying path
// wins. Throws InternalError when none qualifies.
std::vector<int> find_good_path(const Graph& t, int k);

// Layout of width exactly tree_lmw(t), certified by evaluation.
std::pair<LinearLayout, WidthReport> construct_tree_layout(const Graph& t,
                                                           const RunConfig& cfg = {});

}  // namespace limw
