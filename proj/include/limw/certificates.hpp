#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "limw/config.hpp"
#include "limw/graph.hpp"

namespace limw {

enum class CertVariant { ThreeParts, EdgeLeaf, OracleLeaf, InducedSubgraph };

// Recursive lower-bound witness for lmw(G) >= bound.
//
//   ThreeParts      host set, three connected parts at pairwise distance >= 2,
//                   three connecting paths each avoiding N[third part];
//                   bound = 1 + min(child bounds).
//   EdgeLeaf        host = the edge [u,v]; bound = 1.
//   OracleLeaf      host = a subgraph small enough for the exact oracle;
//                   bound = its lmw.
//   InducedSubgraph host set inducing the child's ambient graph; bound
//                   inherited from the single child.
struct LowerBoundCertificate {
    CertVariant variant = CertVariant::EdgeLeaf;
    int bound = 0;
    std::vector<int> host;
    std::vector<std::vector<int>> parts;            // ThreeParts: exactly 3
    std::map<std::string, std::vector<int>> paths;  // keys "12", "13", "23"
    std::vector<LowerBoundCertificate> children;
};

struct CheckResult {
    bool ok = false;
    int bound = 0;
    std::string node;       // path to the failing node, e.g. "root.children[1]"
    std::string condition;  // failed condition name
    std::string message;
};

// Verify every hypothesis of the certificate against g and return the
// validated bound. Throws DomainError on rejection (message names the node
// and condition), ResourceError when an oracle leaf exceeds the cutoff.
int check_certificate(const Graph& g, const LowerBoundCertificate& cert,
                      const RunConfig& cfg = {});

// Non-throwing variant.
CheckResult try_check_certificate(const Graph& g, const LowerBoundCertificate& cert,
                                  const RunConfig& cfg = {});

// Certificate proving lmw(t²) >= tree_lmw(t) for a tree t, by recursively
// locating a node with three k-neighbors and wrapping the three hanging
// subtree squares in a ThreeParts node.
LowerBoundCertificate certify_square_lower_bound(const Graph& t,
                                                 const RunConfig& cfg = {});

// Certificate proving lmw(H(k)²) >= 2k: drop the root, then nest two
// ThreeParts levels per recursion step (copy blocks, then rootless copies).
LowerBoundCertificate certify_H_square(int k);

// Single random structural corruption (field tweak) of a certificate;
// used by the robustness fuzzing suite.
LowerBoundCertificate corrupt_certificate(const LowerBoundCertificate& cert,
                                          std::mt19937_64& rng);

std::string certificate_to_json(const LowerBoundCertificate& cert);
LowerBoundCertificate certificate_from_json(const std::string& text);

}  // namespace limw
