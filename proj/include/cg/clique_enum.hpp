#pragma once

#include "cg/enum_report.hpp"
#include "cg/graph.hpp"

namespace cg {

// All maximal cliques of g. Recursive candidate generation over a fixed
// vertex order: a maximal clique of the prefix graph either survives the
// next vertex, extends by it, or is anchored at a non-adjacent pair whose
// common neighborhood (at most c-1 vertices in a c-closed graph) is
// enumerated by the pivoting clique enumerator.
EnumerationReport enumerate_max_cliques(const Graph& g);

// Maximal independent sets = maximal cliques of the complement.
EnumerationReport enumerate_max_independent_sets(const Graph& g);

// n^2 * 3^((c-1)/3)
double clique_count_bound(int n, int c);

}  // namespace cg
