#pragma once

#include <optional>
#include <utility>

#include "cg/graph.hpp"

namespace cg {

// Smallest c such that every non-adjacent pair has at most c-1 common
// neighbors. Complete graphs (no non-adjacent pair) give c = 1.
struct ClosureNumber {
    int c = 1;
    // A non-adjacent pair attaining c-1 common neighbors; absent when c = 1
    // with no non-adjacent pair at all.
    std::optional<std::pair<int, int>> witness;
};

ClosureNumber closure_number(const Graph& g);

struct CoClosureCheck {
    bool ok = true;
    // An adjacent pair u,v with |V \ N[u,v]| > c-1 when the check fails.
    std::optional<std::pair<int, int>> violating_pair;
};

// True iff g is the complement of a c-closed graph: every adjacent pair u,v
// leaves at most c-1 vertices outside N[u,v].
CoClosureCheck co_closure_check(const Graph& g, int c);

// Minimal-by-construction c-closed supergraph: repeatedly join the
// lexicographically smallest non-adjacent pair with >= c common neighbors.
Graph closure_augment(const Graph& g, int c);

}  // namespace cg
