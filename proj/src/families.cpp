#include "limw/families.hpp"

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "limw/config.hpp"
#include "limw/tree_width.hpp"

namespace limw {

namespace {

constexpr long long kMaxGenerated = 2'000'000;

void check_level(const char* who, int k, int cap) {
    if (k < 0 || k > cap) throw DomainError(std::string(who) + ": level out of range");
}

void build_l(int k, int base, const std::string& prefix,
             std::vector<std::pair<int, int>>& edges, std::vector<std::string>& roles) {
    roles[base] = prefix + "u" + std::to_string(k);
    if (k == 0) return;
    int span = int(l_size(k - 1)) + 1;
    for (int i = 1; i <= 3; ++i) {
        int v = base + 1 + (i - 1) * span;
        edges.push_back({base, v});
        roles[v] = prefix + "v" + std::to_string(i);
        edges.push_back({v, v + 1});
        build_l(k - 1, v + 1, prefix + "S" + std::to_string(i) + ".", edges, roles);
    }
}

void build_h(int k, int base, const std::string& prefix,
             std::vector<std::pair<int, int>>& edges, std::vector<std::string>& roles) {
    roles[base] = prefix + "u" + std::to_string(k);
    if (k == 0) return;
    int sub = int(h_size(k - 1));
    for (int i = 1; i <= 3; ++i) {
        int v = base + 1 + (i - 1) * (1 + 3 * sub);
        edges.push_back({base, v});
        roles[v] = prefix + "v" + std::to_string(i);
        for (int a = 1; a <= 3; ++a) {
            int c = v + 1 + (a - 1) * sub;
            edges.push_back({v, c});
            build_h(k - 1, c,
                    prefix + "S" + std::to_string(i) + "," + std::to_string(a) + ".",
                    edges, roles);
        }
    }
}

FamilyInstance assemble(FamilyKind kind, int k) {
    long long size = family_size(kind, k);
    if (size > kMaxGenerated)
        throw DomainError("gen_family: instance too large to generate");
    int n = int(size);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    std::vector<std::string> roles(n);
    if (kind == FamilyKind::L)
        build_l(k, 0, "", edges, roles);
    else
        build_h(k, 0, "", edges, roles);
    Graph g(n, edges);
    for (int i = 0; i < n; ++i) g.set_label(i, roles[i]);
    FamilyInstance inst;
    inst.kind = kind;
    inst.k = k;
    inst.tree = root_tree(g, 0);
    inst.roles = std::move(roles);
    return inst;
}

void l_layout_rec(int k, int base, std::vector<int>& out) {
    out.push_back(base);
    if (k == 0) return;
    int span = int(l_size(k - 1)) + 1;
    for (int i = 1; i <= 3; ++i) {
        int v = base + 1 + (i - 1) * span;
        l_layout_rec(k - 1, v + 1, out);
        out.push_back(v);
    }
}

}  // namespace

long long l_size(int k) {
    check_level("l_size", k, 38);  // 3^(k+1) - 2 overflows past that
    long long s = 1;
    for (int i = 0; i < k; ++i) s = 4 + 3 * s;
    return s;
}

long long h_size(int k) {
    check_level("h_size", k, 19);  // (3^(2k+1) - 1) / 2 overflows past that
    long long s = 1;
    for (int i = 0; i < k; ++i) s = 4 + 9 * s;
    return s;
}

long long family_size(FamilyKind kind, int k) {
    return kind == FamilyKind::L ? l_size(k) : h_size(k);
}

FamilyInstance gen_L(int k) { return assemble(FamilyKind::L, k); }

FamilyInstance gen_H(int k) { return assemble(FamilyKind::H, k); }

FamilyInstance gen_family(FamilyKind kind, int k) { return assemble(kind, k); }

std::vector<int> family_middles(const FamilyInstance& inst) {
    if (inst.k == 0) return {};
    int span = inst.kind == FamilyKind::L ? int(l_size(inst.k - 1)) + 1
                                          : 3 * int(h_size(inst.k - 1)) + 1;
    return {1, 1 + span, 1 + 2 * span};
}

int family_copy_root(const FamilyInstance& inst, int i, int a) {
    if (inst.k == 0) throw DomainError("family_copy_root: level 0 has no copies");
    if (i < 1 || i > 3) throw DomainError("family_copy_root: i must be 1..3");
    int per_middle = inst.kind == FamilyKind::L ? 1 : 3;
    if (a < 1 || a > per_middle) throw DomainError("family_copy_root: a out of range");
    int v = family_middles(inst)[i - 1];
    if (inst.kind == FamilyKind::L) return v + 1;
    return v + 1 + (a - 1) * int(h_size(inst.k - 1));
}

LinearLayout l_square_layout(int k) {
    long long size = l_size(k);
    if (size > kMaxGenerated) throw DomainError("l_square_layout: level too large");
    std::vector<int> out;
    out.reserve(size);
    l_layout_rec(k, 0, out);
    return {std::move(out)};
}

LinearLayout h_tree_layout(int k) {
    FamilyInstance inst = gen_H(k);
    return construct_tree_layout(inst.tree.graph).first;
}

std::string roles_to_json(const FamilyInstance& inst) {
    nlohmann::json j;
    j["kind"] = inst.kind == FamilyKind::L ? "L" : "H";
    j["k"] = inst.k;
    j["n"] = inst.tree.graph.n();
    j["roles"] = inst.roles;
    return j.dump(2);
}

}  // namespace limw
