#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cg/graph.hpp"

namespace cg {

// Head-and-tails split: |head| <= k, tails independent; proper when every
// tail sees at most k-1 head vertices.
struct KStar {
    Bitset head;
    Bitset tails;
    bool proper = true;
};

// k anchor edges plus a partition of the remaining vertices: A0 small, every
// other part non-adjacent to its anchor edge.
struct GoodPartition {
    std::vector<std::pair<int, int>> edges;  // e_1..e_k
    std::vector<Bitset> parts;               // A_0..A_k
    int l = 0;

    bool validate(const Graph& h) const;
};

using MisEnumerator = std::function<std::vector<Bitset>(const Graph&)>;
using KeepPredicate = std::function<bool(const Bitset&)>;

// All S = head u tails where the head runs over every set of at most k
// vertices and the tails are a maximal independent set of g minus the head
// (minus, for full heads, the vertices adjacent to all of the head).
// Deduplicated by S; every emitted S induces a proper k-star.
std::vector<std::pair<KStar, Bitset>> enumerate_proper_kstars(const Graph& g, int k,
                                                              const MisEnumerator& mis);
std::vector<std::pair<KStar, Bitset>> enumerate_proper_kstars(const Graph& g, int k);

struct GoodPartitionAnchors {
    std::vector<std::pair<int, int>> edges;
    Bitset a0;
};

// All S = A0 u (anchor edges) u T with T drawn from the vertices
// non-adjacent to at least one anchor edge, filtered by keep.
std::vector<Bitset> enumerate_good_partition_sets(const Graph& g, const GoodPartitionAnchors& anchors,
                                                  const KeepPredicate& keep);

// A good (l,k)-partition certificate of h, if one exists. For a fixed edge
// k-tuple feasibility holds iff at most l outside vertices are adjacent to
// every anchor edge; tuples from a maximum matching are tried first.
std::optional<GoodPartition> detect_good_partition(const Graph& h, int l, int k);

// Exists a head A, |A| <= k, with V \ A independent and every outside vertex
// adjacent to at most k-1 head vertices.
bool is_proper_kstar(const Graph& h, int k);

// Greedy-free maximum matching (exact, exponential-time branch and bound;
// intended for small graphs).
std::vector<std::pair<int, int>> maximum_matching(const Graph& g);

}  // namespace cg
