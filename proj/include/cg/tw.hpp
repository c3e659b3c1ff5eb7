#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cg/graph.hpp"

namespace cg {

// Tree over bag indices plus one vertex set per bag.
struct TreeDecomposition {
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<Bitset> bags;

    int width() const {
        int w = -1;
        for (const Bitset& b : bags) w = std::max(w, b.count() - 1);
        return w;
    }
};

struct DecompositionCheck {
    bool ok = true;
    std::string violated_axiom;  // empty when ok
};

// Axioms: vertices covered, edges covered, running intersection.
DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td);

struct TreewidthResult {
    int width = 0;
    TreeDecomposition decomposition;
};

// Exact treewidth by dynamic programming over vertex subsets (elimination
// orderings). Memory is 2^n bytes-scale; refuses n > limit.
TreewidthResult treewidth_exact(const Graph& g, int limit = 32);

// max over v of tw(g[ball(v, r)]).
int local_treewidth(const Graph& g, int r, int limit = 32);

struct LocalTWProfile {
    std::map<int, int> values;  // r -> ltw(r)
};
LocalTWProfile local_tw_profile(const Graph& g, int r_max, int limit = 32);

}  // namespace cg
