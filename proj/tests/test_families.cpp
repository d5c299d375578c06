#include <string>
#include <vector>

#include "doctest.h"
#include "limw/families.hpp"
#include "limw/graph.hpp"
#include "limw/layout.hpp"
#include "limw/tree_width.hpp"

namespace {
using namespace limw;
}

TEST_CASE("family sizes follow the recurrences") {
    CHECK(l_size(0) == 1);
    CHECK(l_size(1) == 7);
    CHECK(l_size(2) == 25);
    CHECK(l_size(3) == 79);
    CHECK(l_size(4) == 241);
    CHECK(h_size(0) == 1);
    CHECK(h_size(1) == 13);
    CHECK(h_size(2) == 121);
    CHECK(h_size(3) == 1093);
    for (int k = 0; k < 6; ++k) {
        CHECK(l_size(k + 1) == 4 + 3 * l_size(k));
        CHECK(h_size(k + 1) == 4 + 9 * h_size(k));
    }
    CHECK(family_size(FamilyKind::L, 3) == 79);
    CHECK(family_size(FamilyKind::H, 2) == 121);
    CHECK_THROWS_AS(l_size(-1), DomainError);
    CHECK_THROWS_AS(gen_H(12), DomainError);
}

TEST_CASE("generated instances are preorder-rooted trees") {
    for (int k = 0; k <= 3; ++k) {
        FamilyInstance l = gen_L(k);
        CHECK(l.tree.graph.n() == l_size(k));
        CHECK(is_tree(l.tree.graph));
        CHECK(l.tree.root == 0);
        CHECK(l.tree.parent[0] == 0);
        for (int v = 1; v < l.tree.graph.n(); ++v) CHECK(l.tree.parent[v] < v);
    }
    FamilyInstance h2 = gen_H(2);
    CHECK(h2.tree.graph.n() == 121);
    CHECK(is_tree(h2.tree.graph));
    for (int v = 1; v < 121; ++v) CHECK(h2.tree.parent[v] < v);
}

TEST_CASE("triple-branch structure at the top level") {
    FamilyInstance l1 = gen_L(1);
    CHECK(l1.tree.graph.degree(0) == 3);
    CHECK(l1.tree.graph.neighbors(0) == std::vector<int>{1, 3, 5});
    for (int v : {1, 3, 5}) CHECK(l1.tree.graph.degree(v) == 2);
    for (int v : {2, 4, 6}) CHECK(l1.tree.graph.degree(v) == 1);

    FamilyInstance h1 = gen_H(1);
    CHECK(h1.tree.graph.degree(0) == 3);
    for (int v : {1, 5, 9}) CHECK(h1.tree.graph.degree(v) == 4);
}

TEST_CASE("role labels spell out the construction") {
    FamilyInstance l2 = gen_L(2);
    CHECK(l2.roles[0] == "u2");
    CHECK(l2.roles[1] == "v1");
    CHECK(l2.roles[2] == "S1.u1");
    CHECK(l2.roles[3] == "S1.v1");
    CHECK(l2.roles[9] == "v2");
    CHECK(l2.tree.graph.label(0) == "u2");

    FamilyInstance h1 = gen_H(1);
    CHECK(h1.roles[0] == "u1");
    CHECK(h1.roles[1] == "v1");
    CHECK(h1.roles[2] == "S1,1.u0");
    CHECK(h1.roles[6] == "S2,1.u0");

    std::string json = roles_to_json(h1);
    CHECK(json.find("\"kind\": \"H\"") != std::string::npos);
    CHECK(json.find("S3,3.u0") != std::string::npos);
}

TEST_CASE("middles and copy roots") {
    CHECK(family_middles(gen_L(0)).empty());
    CHECK(family_middles(gen_L(2)) == std::vector<int>{1, 9, 17});
    CHECK(family_middles(gen_H(1)) == std::vector<int>{1, 5, 9});

    FamilyInstance l2 = gen_L(2);
    CHECK(family_copy_root(l2, 1, 1) == 2);
    CHECK(family_copy_root(l2, 2, 1) == 10);
    CHECK(family_copy_root(l2, 3, 1) == 18);
    CHECK_THROWS_AS(family_copy_root(l2, 1, 2), DomainError);
    CHECK_THROWS_AS(family_copy_root(l2, 4, 1), DomainError);

    FamilyInstance h1 = gen_H(1);
    CHECK(family_copy_root(h1, 1, 2) == 3);
    CHECK(family_copy_root(h1, 3, 3) == 12);
}

TEST_CASE("family trees have the advertised width") {
    for (int k = 0; k <= 4; ++k) CHECK(tree_lmw(gen_L(k).tree.graph) == k);
    for (int k = 0; k <= 3; ++k) CHECK(tree_lmw(gen_H(k).tree.graph) == k);
}

TEST_CASE("concatenation layout of the squared L family") {
    CHECK(l_square_layout(0).order == std::vector<int>{0});
    CHECK(l_square_layout(1).order == std::vector<int>{0, 2, 1, 4, 3, 6, 5});

    for (int k = 0; k <= 2; ++k) {
        Graph square = graph_power(gen_L(k).tree.graph, 2);
        LinearLayout sigma = l_square_layout(k);
        CHECK(is_valid_layout(square, sigma));
        CHECK(mw_of_layout(square, sigma).width == k);
    }
}

TEST_CASE("stitched layout of the H family") {
    CHECK(h_tree_layout(0).order == std::vector<int>{0});
    for (int k = 0; k <= 2; ++k) {
        Graph host = gen_H(k).tree.graph;
        LinearLayout sigma = h_tree_layout(k);
        CHECK(is_valid_layout(host, sigma));
        CHECK(mw_of_layout(host, sigma).width == k);
    }
}

TEST_CASE("squared H layout meets the doubling bound with equality") {
    for (int k = 1; k <= 2; ++k) {
        auto [base, squared] = power_layout_bound(gen_H(k).tree.graph, h_tree_layout(k), 2);
        CHECK(base == k);
        CHECK(squared == 2 * k);
    }
}
