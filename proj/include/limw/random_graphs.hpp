#pragma once

#include <random>

#include "limw/graph.hpp"
#include "limw/layout.hpp"

namespace limw {

// Uniform random labeled tree via a random Prüfer sequence. n >= 1.
Graph prufer_random_tree(int n, std::mt19937_64& rng);

// G(n,p): each pair independently an edge with probability p.
Graph gnp_random_graph(int n, double p, std::mt19937_64& rng);

LinearLayout random_permutation(int n, std::mt19937_64& rng);

}  // namespace limw
