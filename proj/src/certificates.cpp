#include "limw/certificates.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "limw/families.hpp"
#include "limw/layout.hpp"
#include "limw/tree_width.hpp"
#include "limw/vertex_set.hpp"

namespace limw {

namespace {

const char* const kPathKeys[3] = {"12", "13", "23"};
const int kPathPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

struct Reject {
    std::string node;
    std::string condition;
    std::string message;
};

[[noreturn]] void reject(const std::string& node, const std::string& condition,
                         const std::string& message) {
    throw Reject{node, condition, message};
}

VertexSet ids_to_set(const std::vector<int>& ids, int n, const std::string& node,
                     const std::string& what) {
    VertexSet s(n);
    for (int v : ids) {
        if (v < 0 || v >= n)
            reject(node, "schema", what + " id " + std::to_string(v) + " out of range");
        if (s.test(v)) reject(node, "schema", what + " repeats id " + std::to_string(v));
        s.set(v);
    }
    return s;
}

bool subset_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    VertexSet seen(g.n());
    std::vector<int> stack{s.first()};
    seen.set(s.first());
    long long cnt = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x)) {
            if (s.test(y) && !seen.test(y)) {
                seen.set(y);
                stack.push_back(y);
                ++cnt;
            }
        }
    }
    return cnt == s.count();
}

int check_rec(const Graph& g, const LowerBoundCertificate& cert, const VertexSet& ambient,
              const std::string& node, const RunConfig& cfg) {
    int n = g.n();
    if (cert.bound < 0) reject(node, "schema", "negative bound");
    VertexSet host = ids_to_set(cert.host, n, node, "host");
    if (!host.is_subset_of(ambient)) reject(node, "host-subset", "host leaves the ambient set");

    if (cert.variant == CertVariant::EdgeLeaf) {
        if (!cert.parts.empty() || !cert.paths.empty() || !cert.children.empty())
            reject(node, "schema", "EdgeLeaf carries parts, paths or children");
        if (cert.host.size() != 2) reject(node, "schema", "EdgeLeaf host must be a single edge");
        if (!g.has_edge(cert.host[0], cert.host[1]))
            reject(node, "edge-exists", "host pair " + std::to_string(cert.host[0]) + "," +
                                            std::to_string(cert.host[1]) + " is not an edge");
        if (cert.bound != 1) reject(node, "bound-mismatch", "EdgeLeaf bound must be 1");
        return 1;
    }

    if (cert.variant == CertVariant::OracleLeaf) {
        if (!cert.parts.empty() || !cert.paths.empty() || !cert.children.empty())
            reject(node, "schema", "OracleLeaf carries parts, paths or children");
        if (host.empty()) reject(node, "schema", "OracleLeaf host is empty");
        int w = lmw_oracle(induced_subgraph(g, host).graph, cfg).width;
        if (cert.bound != w)
            reject(node, "oracle-bound", "oracle width " + std::to_string(w) +
                                             " != claimed " + std::to_string(cert.bound));
        return cert.bound;
    }

    if (cert.variant == CertVariant::InducedSubgraph) {
        if (!cert.parts.empty() || !cert.paths.empty())
            reject(node, "schema", "InducedSubgraph carries parts or paths");
        if (cert.children.size() != 1)
            reject(node, "children-count", "InducedSubgraph needs exactly one child");
        int b = check_rec(g, cert.children[0], host, node + ".children[0]", cfg);
        if (cert.bound != b)
            reject(node, "bound-mismatch",
                   "bound " + std::to_string(cert.bound) + " != child bound " + std::to_string(b));
        return cert.bound;
    }

    // ThreeParts: all hypotheses are judged inside the host-induced subgraph.
    if (cert.parts.size() != 3) reject(node, "parts-count", "need exactly three parts");
    if (cert.children.size() != 3) reject(node, "children-count", "need exactly three children");

    InducedSubgraph sub = induced_subgraph(g, host);
    std::vector<int> to_local(n, -1);
    for (int i = 0; i < int(sub.to_host.size()); ++i) to_local[sub.to_host[i]] = i;

    std::array<VertexSet, 3> parts_g;
    std::array<VertexSet, 3> parts_l;
    for (int i = 0; i < 3; ++i) {
        std::string what = "part " + std::to_string(i + 1);
        parts_g[i] = ids_to_set(cert.parts[i], n, node, what);
        if (parts_g[i].empty()) reject(node, "parts-empty", what + " is empty");
        if (!parts_g[i].is_subset_of(host)) reject(node, "parts-inside-host", what + " leaves the host");
        VertexSet pl(sub.graph.n());
        for (int v = parts_g[i].first(); v >= 0; v = parts_g[i].next(v)) pl.set(to_local[v]);
        if (!subset_connected(sub.graph, pl))
            reject(node, "parts-connected", what + " is not connected in the host graph");
        parts_l[i] = std::move(pl);
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (parts_g[i].intersects(parts_g[j]))
                reject(node, "parts-disjoint",
                       "parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
            auto d = subgraph_distance(sub.graph, parts_l[i], parts_l[j]);
            if (d && *d < 2)
                reject(node, "parts-distance",
                       "parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " at distance " + std::to_string(*d));
        }
    }

    if (cert.paths.size() != 3) reject(node, "schema", "paths must carry exactly keys 12, 13, 23");
    for (int p = 0; p < 3; ++p) {
        const std::string key = kPathKeys[p];
        auto it = cert.paths.find(key);
        if (it == cert.paths.end()) reject(node, "schema", "missing path " + key);
        const std::vector<int>& pth = it->second;
        if (pth.empty()) reject(node, "path-endpoints", "path " + key + " is empty");
        for (int v : pth)
            if (v < 0 || v >= n || to_local[v] < 0)
                reject(node, "path-inside-host",
                       "path " + key + " vertex " + std::to_string(v) + " leaves the host");
        for (size_t q = 0; q + 1 < pth.size(); ++q)
            if (!sub.graph.has_edge(to_local[pth[q]], to_local[pth[q + 1]]))
                reject(node, "path-adjacency",
                       "path " + key + " hops " + std::to_string(pth[q]) + " to " +
                           std::to_string(pth[q + 1]) + " without an edge");
        int i = kPathPairs[p][0], j = kPathPairs[p][1];
        if (!parts_g[i].test(pth.front()) || !parts_g[j].test(pth.back()))
            reject(node, "path-endpoints",
                   "path " + key + " must run from part " + std::to_string(i + 1) + " to part " +
                       std::to_string(j + 1));
        int third = 3 - i - j;
        VertexSet avoid = neighborhood(sub.graph, parts_l[third], true);
        for (int v : pth)
            if (avoid.test(to_local[v]))
                reject(node, "path-avoids-third",
                       "path " + key + " vertex " + std::to_string(v) +
                           " touches N[part " + std::to_string(third + 1) + "]");
    }

    int mn = INT_MAX;
    for (int i = 0; i < 3; ++i) {
        int b = check_rec(g, cert.children[i], parts_g[i],
                          node + ".children[" + std::to_string(i) + "]", cfg);
        mn = std::min(mn, b);
    }
    if (cert.bound != 1 + mn)
        reject(node, "bound-mismatch", "bound " + std::to_string(cert.bound) +
                                           " != 1 + min child bound " + std::to_string(mn));
    return cert.bound;
}

}  // namespace

int check_certificate(const Graph& g, const LowerBoundCertificate& cert, const RunConfig& cfg) {
    try {
        return check_rec(g, cert, VertexSet::full(g.n()), "root", cfg);
    } catch (const Reject& r) {
        throw DomainError("certificate rejected at " + r.node + " [" + r.condition + "]: " +
                          r.message);
    }
}

CheckResult try_check_certificate(const Graph& g, const LowerBoundCertificate& cert,
                                  const RunConfig& cfg) {
    CheckResult res;
    try {
        res.bound = check_rec(g, cert, VertexSet::full(g.n()), "root", cfg);
        res.ok = true;
    } catch (const Reject& r) {
        res.ok = false;
        res.node = r.node;
        res.condition = r.condition;
        res.message = r.message;
    }
    return res;
}

namespace {

// Certificate for the square of t[s] claiming bound k, vertices in t's ids.
LowerBoundCertificate square_cert_rec(const Graph& t, const VertexSet& s, int k) {
    LowerBoundCertificate cert;
    cert.host = s.to_vector();
    if (k <= 0) {
        cert.variant = CertVariant::OracleLeaf;
        cert.bound = 0;
        return cert;
    }
    if (k == 1) {
        int a = s.first();
        int b = -1;
        for (int y : t.neighbors(a)) {
            if (s.test(y)) {
                b = y;
                break;
            }
        }
        if (b < 0) throw InternalError("certify_square_lower_bound: piece has no edge");
        cert.variant = CertVariant::EdgeLeaf;
        cert.bound = 1;
        cert.host = {a, b};
        return cert;
    }

    InducedSubgraph sub = induced_subgraph(t, s);
    DirectedSubtreeTable table(sub.graph);
    for (int x = 0; x < sub.graph.n(); ++x) {
        if (sub.graph.degree(x) < 3) continue;
        std::vector<std::pair<int, int>> picks;  // local (v, u), branch side(v,u) is wide
        for (int v : sub.graph.neighbors(x)) {
            for (int u : sub.graph.neighbors(v)) {
                if (u == x) continue;
                if (table.width_toward(v, u) >= k - 1) {
                    picks.push_back({v, u});
                    break;
                }
            }
            if (picks.size() == 3) break;
        }
        if (picks.size() < 3) continue;

        cert.variant = CertVariant::ThreeParts;
        cert.bound = k;
        std::array<VertexSet, 3> part_sets;
        for (int i = 0; i < 3; ++i) {
            const VertexSet& pl = table.side(picks[i].first, picks[i].second);
            VertexSet ph(t.n());
            for (int w = pl.first(); w >= 0; w = pl.next(w)) ph.set(sub.to_host[w]);
            cert.parts.push_back(ph.to_vector());
            part_sets[i] = std::move(ph);
        }
        for (int p = 0; p < 3; ++p) {
            int i = kPathPairs[p][0], j = kPathPairs[p][1];
            cert.paths[kPathKeys[p]] = {sub.to_host[picks[i].second], sub.to_host[picks[i].first],
                                        sub.to_host[picks[j].first], sub.to_host[picks[j].second]};
        }
        for (int i = 0; i < 3; ++i)
            cert.children.push_back(square_cert_rec(t, part_sets[i], k - 1));
        return cert;
    }
    throw InternalError("certify_square_lower_bound: no pivot with three wide branches");
}

std::vector<int> id_range(int lo, int hi) {
    std::vector<int> out;
    out.reserve(hi - lo + 1);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

// Bound 2k for the square of the H(k) copy with preorder root r, root dropped.
LowerBoundCertificate h_rootless_cert(int k, int r) {
    LowerBoundCertificate cert;
    cert.variant = CertVariant::ThreeParts;
    cert.bound = 2 * k;
    int total = int(h_size(k));
    int sub = int(h_size(k - 1));
    cert.host = id_range(r + 1, r + total - 1);
    int v[3], first_copy[3];
    for (int i = 0; i < 3; ++i) {
        v[i] = r + 1 + i * (1 + 3 * sub);
        first_copy[i] = v[i] + 1;
        cert.parts.push_back(id_range(v[i] + 1, v[i] + 3 * sub));
    }
    for (int p = 0; p < 3; ++p) {
        int i = kPathPairs[p][0], j = kPathPairs[p][1];
        cert.paths[kPathKeys[p]] = {first_copy[i], v[i], v[j], first_copy[j]};
    }
    for (int i = 0; i < 3; ++i) {
        if (k == 1) {
            // Rootless level-0 copies are empty; the part still has an edge.
            LowerBoundCertificate leaf;
            leaf.variant = CertVariant::EdgeLeaf;
            leaf.bound = 1;
            leaf.host = {v[i] + 1, v[i] + 2};
            cert.children.push_back(std::move(leaf));
            continue;
        }
        LowerBoundCertificate inner;
        inner.variant = CertVariant::ThreeParts;
        inner.bound = 2 * k - 1;
        inner.host = id_range(v[i] + 1, v[i] + 3 * sub);
        int cr[3];
        for (int a = 0; a < 3; ++a) {
            cr[a] = v[i] + 1 + a * sub;
            inner.parts.push_back(id_range(cr[a] + 1, cr[a] + sub - 1));
        }
        for (int p = 0; p < 3; ++p) {
            int a = kPathPairs[p][0], b = kPathPairs[p][1];
            inner.paths[kPathKeys[p]] = {cr[a] + 1, cr[a], cr[b], cr[b] + 1};
        }
        for (int a = 0; a < 3; ++a) inner.children.push_back(h_rootless_cert(k - 1, cr[a]));
        cert.children.push_back(std::move(inner));
    }
    return cert;
}

}  // namespace

LowerBoundCertificate certify_square_lower_bound(const Graph& t, const RunConfig&) {
    if (!is_tree(t)) throw DomainError("certify_square_lower_bound: input is not a tree");
    return square_cert_rec(t, VertexSet::full(t.n()), tree_lmw(t));
}

LowerBoundCertificate certify_H_square(int k) {
    if (k < 0) throw DomainError("certify_H_square: k must be >= 0");
    if (k == 0) {
        LowerBoundCertificate leaf;
        leaf.variant = CertVariant::OracleLeaf;
        leaf.bound = 0;
        leaf.host = {0};
        return leaf;
    }
    long long size = h_size(k);
    if (size > 2'000'000) throw DomainError("certify_H_square: level too large");
    LowerBoundCertificate top;
    top.variant = CertVariant::InducedSubgraph;
    top.bound = 2 * k;
    top.host = id_range(1, int(size) - 1);
    top.children.push_back(h_rootless_cert(k, 0));
    return top;
}

namespace {

void collect_nodes(LowerBoundCertificate& c, std::vector<LowerBoundCertificate*>& out) {
    out.push_back(&c);
    for (auto& ch : c.children) collect_nodes(ch, out);
}

}  // namespace

LowerBoundCertificate corrupt_certificate(const LowerBoundCertificate& cert,
                                          std::mt19937_64& rng) {
    LowerBoundCertificate out = cert;
    std::vector<LowerBoundCertificate*> nodes;
    collect_nodes(out, nodes);
    LowerBoundCertificate& tgt = *nodes[rng() % nodes.size()];

    std::vector<int> ops{0, 10};
    if (tgt.bound > 0) ops.push_back(1);
    if (!tgt.host.empty()) {
        ops.push_back(2);
        ops.push_back(3);
        ops.push_back(4);
    }
    if (!tgt.parts.empty()) {
        ops.push_back(5);
        ops.push_back(6);
    }
    if (!tgt.paths.empty()) {
        ops.push_back(7);
        ops.push_back(8);
    }
    if (!tgt.children.empty()) ops.push_back(9);

    switch (ops[rng() % ops.size()]) {
        case 0:
            tgt.bound += 1;
            break;
        case 1:
            tgt.bound -= 1;
            break;
        case 2:
            tgt.host.erase(tgt.host.begin() + rng() % tgt.host.size());
            break;
        case 3:
            tgt.host.push_back(tgt.host.back() + 1 + int(rng() % 3));
            break;
        case 4:
            tgt.host[rng() % tgt.host.size()] += 1 + int(rng() % 5);
            break;
        case 5: {
            auto& part = tgt.parts[rng() % tgt.parts.size()];
            if (part.empty())
                part.push_back(int(rng() % 64));
            else
                part.erase(part.begin() + rng() % part.size());
            break;
        }
        case 6: {
            auto& part = tgt.parts[rng() % tgt.parts.size()];
            part.push_back(tgt.host[rng() % tgt.host.size()]);
            break;
        }
        case 7: {
            auto it = tgt.paths.begin();
            std::advance(it, rng() % tgt.paths.size());
            if (it->second.empty())
                it->second.push_back(int(rng() % 64));
            else
                it->second.erase(it->second.begin() + rng() % it->second.size());
            break;
        }
        case 8: {
            auto it = tgt.paths.begin();
            std::advance(it, rng() % tgt.paths.size());
            if (it->second.empty()) {
                it->second.push_back(int(rng() % 64));
            } else {
                int& v = it->second[rng() % it->second.size()];
                v = tgt.host.empty() ? v + 1 : tgt.host[rng() % tgt.host.size()];
            }
            break;
        }
        case 9:
            tgt.children[rng() % tgt.children.size()].bound += 1;
            break;
        case 10: {
            static const CertVariant kVars[4] = {CertVariant::ThreeParts, CertVariant::EdgeLeaf,
                                                 CertVariant::OracleLeaf,
                                                 CertVariant::InducedSubgraph};
            CertVariant nv = kVars[rng() % 4];
            while (nv == tgt.variant) nv = kVars[rng() % 4];
            tgt.variant = nv;
            break;
        }
    }
    return out;
}

namespace {

const char* variant_name(CertVariant v) {
    switch (v) {
        case CertVariant::ThreeParts:
            return "ThreeParts";
        case CertVariant::EdgeLeaf:
            return "EdgeLeaf";
        case CertVariant::OracleLeaf:
            return "OracleLeaf";
        case CertVariant::InducedSubgraph:
            return "InducedSubgraph";
    }
    return "";
}

nlohmann::json cert_to_json_rec(const LowerBoundCertificate& c) {
    nlohmann::json j;
    j["variant"] = variant_name(c.variant);
    j["bound"] = c.bound;
    j["host"] = c.host;
    j["parts"] = c.parts;
    j["paths"] = nlohmann::json::object();
    for (const auto& [key, pth] : c.paths) j["paths"][key] = pth;
    j["children"] = nlohmann::json::array();
    for (const auto& ch : c.children) j["children"].push_back(cert_to_json_rec(ch));
    return j;
}

LowerBoundCertificate cert_from_json_rec(const nlohmann::json& j) {
    if (!j.is_object()) throw IoError("certificate JSON: node is not an object");
    LowerBoundCertificate c;
    std::string v = j.value("variant", std::string());
    if (v == "ThreeParts")
        c.variant = CertVariant::ThreeParts;
    else if (v == "EdgeLeaf")
        c.variant = CertVariant::EdgeLeaf;
    else if (v == "OracleLeaf")
        c.variant = CertVariant::OracleLeaf;
    else if (v == "InducedSubgraph")
        c.variant = CertVariant::InducedSubgraph;
    else
        throw IoError("certificate JSON: unknown variant '" + v + "'");
    if (!j.contains("bound") || !j["bound"].is_number_integer())
        throw IoError("certificate JSON: missing integer bound");
    c.bound = j["bound"].get<int>();
    if (j.contains("host")) c.host = j["host"].get<std::vector<int>>();
    if (j.contains("parts")) c.parts = j["parts"].get<std::vector<std::vector<int>>>();
    if (j.contains("paths"))
        for (const auto& [key, val] : j["paths"].items())
            c.paths[key] = val.get<std::vector<int>>();
    if (j.contains("children"))
        for (const auto& ch : j["children"]) c.children.push_back(cert_from_json_rec(ch));
    return c;
}

}  // namespace

std::string certificate_to_json(const LowerBoundCertificate& cert) {
    return cert_to_json_rec(cert).dump(2);
}

LowerBoundCertificate certificate_from_json(const std::string& text) {
    try {
        return cert_from_json_rec(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("certificate JSON: ") + e.what());
    }
}

}  // namespace limw
