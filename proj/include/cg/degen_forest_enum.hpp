#pragma once

#include "cg/enum_report.hpp"
#include "cg/graph.hpp"

namespace cg {

struct DegenConfig {
    int d = 1;
};

// Exactly the maximal S whose complement-side induced graph is d-degenerate.
// Candidates: proper (4d+1)-stars kept when d-degenerate, plus, for every
// tuple of 2d pairwise disjoint complement edges, the maximal d-degenerate
// subgraphs of the anchored kernel (anchor edges, their non-neighborhoods,
// and the vertices adjacent to every anchor edge).
EnumerationReport enumerate_bounded_codegen(const Graph& g, const DegenConfig& cfg);

// Exactly the maximal S whose complement-side induced graph is a forest.
// Candidates: maximal stars (center + maximal independent set), two-component
// forests anchored at a pair of far-apart edges, and path-of-four forests
// anchored at an induced three-vertex path plus its extension.
EnumerationReport enumerate_max_coforests(const Graph& g);

struct DegenBound {
    double value = 0.0;
    bool from_paper = true;  // false for d >= 2, where the base has no closed form
};
// n^(8d) * gamma_d^(2dc) with gamma_1 = 1.8638.
DegenBound degen_count_bounds(int n, int c, int d);

// 3 n^3 (c-1) * 1.8638^(2c-3)
double forest_count_bound(int n, int c);

}  // namespace cg
