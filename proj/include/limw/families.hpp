#pragma once

#include <string>
#include <vector>

#include "limw/graph.hpp"
#include "limw/layout.hpp"

namespace limw {

enum class FamilyKind { L, H };

// A generated family tree with per-vertex role strings that spell out the
// recursive construction: "u2" (root at level 2), "v1".."v3" (middles),
// "S1.u1" / "S2,3.v1" (inside the named copy, recursively).
struct FamilyInstance {
    FamilyKind kind = FamilyKind::L;
    int k = 0;
    RootedTree tree;
    std::vector<std::string> roles;
};

// L(0) = K1; L(k+1) = root u with children v1,v2,v3, each vi having one
// child that roots a copy of L(k). Ids assigned in preorder, root = 0.
FamilyInstance gen_L(int k);

// H(0) = K1; H(k+1) = root u with children v1,v2,v3, each vi having three
// children, each rooting a copy of H(k). Preorder ids.
FamilyInstance gen_H(int k);

FamilyInstance gen_family(FamilyKind kind, int k);

long long l_size(int k);  // 1, 7, 25, 79, 241, ...
long long h_size(int k);  // 1, 13, 121, 1093, ...
long long family_size(FamilyKind kind, int k);

// The middle vertices v1,v2,v3 of the top level (empty for k = 0).
std::vector<int> family_middles(const FamilyInstance& inst);

// Root of the a-th copy (1-based) under middle vi of the top level.
int family_copy_root(const FamilyInstance& inst, int i, int a);

// Concatenation layout (u) σ_{S1²} (v1) σ_{S2²} (v2) σ_{S3²} (v3) for L(k)².
LinearLayout l_square_layout(int k);

// Width-k layout of H(k) itself, built by path stitching and certified.
LinearLayout h_tree_layout(int k);

std::string roles_to_json(const FamilyInstance& inst);

}  // namespace limw
