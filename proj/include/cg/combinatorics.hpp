#pragma once

#include <string>
#include <vector>

#include "cg/graph.hpp"
#include "cg/predicate.hpp"

namespace cg {

// Result of an exhaustive scan over all labeled graphs on a fixed vertex
// count: the largest number of maximal predicate sets any of them attains.
struct BoundRecord {
    int total_vertices = 0;
    int prefix_size = 0;
    Predicate predicate;
    long long max_count = 0;
    std::vector<Graph> argmax_graphs;  // capped
    double bound_value = 0.0;          // 0 when no closed-form bound applies
};

// Scans all 2^C(N,2) labeled graphs on N + prefix_size vertices; with a
// prefix, counts maximal predicate sets containing the first prefix_size
// vertices. free_n + prefix_size <= 7. threads <= 1 runs single-threaded.
BoundRecord max_count_over_all_graphs(int free_n, const Predicate& p, int prefix_size = 0,
                                      int threads = 1, int argmax_cap = 4);

struct KappaResult {
    double root = 0.0;   // largest root in (1,2) of x^(d+4) - 2x^(d+3) + 1
    double table = 0.0;  // published constant (d <= 4); equals root beyond
};
KappaResult kappa(int d);

struct LemmaCheckReport {
    bool disconnected_product_ok = true;
    bool twin_inequality_ok = true;
    bool domination_ok = true;
    bool sees_two_matches_maximality_ok = true;
    long long twin_pairs_checked = 0;
    long long matchings_checked = 0;
    bool all_ok() const {
        return disconnected_product_ok && twin_inequality_ok && domination_ok &&
               sees_two_matches_maximality_ok;
    }
};

// Structural facts about maximal generalized induced matchings (sets whose
// induced subgraph has maximum degree at most one), checked exhaustively
// on one graph: the component product law, the twin edge-deletion
// inequality, the domination property, and the two-witness maximality
// characterization.
LemmaCheckReport verify_m1_lemmas(const Graph& g);

// Count of maximal sets with at most |S| non-edges in the joined
// clique/independent-set construction; also reports whether the count is at
// least C(n, l).
struct Example1Report {
    long long count = 0;
    long long threshold = 0;  // C(n, l)
    bool satisfied = false;
};
Example1Report verify_example1(int l, int n);

// Number of labeled graphs on n vertices (2^C(n,2)); n <= 7.
uint64_t labeled_graph_count(int n);

// Decode graph id: bit k of id is edge k in the (u,v), u<v lexicographic order.
Graph graph_from_id(int n, uint64_t id);
uint64_t graph_to_id(const Graph& g);

}  // namespace cg
