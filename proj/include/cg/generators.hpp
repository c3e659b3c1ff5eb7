#pragma once

#include <cstdint>
#include <vector>

#include "cg/graph.hpp"

namespace cg {

Graph gen_complete(int n);
Graph gen_complete_multipartite(const std::vector<int>& part_sizes);
Graph gen_complete_bipartite(int a, int b);
Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_edgeless(int n);

// Complete (N/3)-partite graph with parts of size 3. Requires N % 3 == 0.
Graph gen_moon_moser(int N);
// N/5 disjoint copies of K5. Requires N % 5 == 0.
Graph gen_k5_union(int N);

struct Example1Graph {
    Graph graph;
    int c = 0;          // closure parameter of the construction
    int clique_size = 0;  // = c - 1, vertices 0..clique_size-1
};
// Clique on c-1 vertices fully joined to an independent set of size n,
// where c = l(l+1)/2 + 1.
Example1Graph gen_example1(int l, int n);

// Each edge present independently with probability p; deterministic per seed.
Graph gen_random(int n, double p, uint64_t seed);

// Uniform random tree (random Pruefer sequence); deterministic per seed.
Graph gen_random_tree(int n, uint64_t seed);

// Random graph with degeneracy <= d: each vertex attaches to at most d
// earlier vertices; deterministic per seed.
Graph gen_random_degenerate(int n, int d, uint64_t seed);

}  // namespace cg
