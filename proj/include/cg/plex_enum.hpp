#pragma once

#include "cg/enum_report.hpp"
#include "cg/graph.hpp"

namespace cg {

// One anchored bounded-degree extension problem: the fixed prefix P lives in
// the host graph, the free vertices R may join, degrees are capped by d.
struct ExtensionInstance {
    const Graph* host = nullptr;
    Bitset prefix;
    Bitset free;
    int degree_cap = 0;
};

// All S with prefix <= S <= prefix u free, max degree of host[S] <= d, and S
// maximal with that property inside host[prefix u free]. Empty when the
// prefix itself violates the cap.
std::vector<Bitset> extend_bounded_degree(const ExtensionInstance& inst);

// All maximal (d+1)-plexes of g, via bounded-degree enumeration on the
// complement: edgeless sets are maximal independent sets of the complement;
// sets with an edge are anchored at that edge plus its retained neighbors.
EnumerationReport enumerate_max_plexes(const Graph& g, int d);

// 2 n^(2d) kappa_d^(c-1+2d); for d = 1 the tight 2 n^2 10^((c-1)/5); for
// d = 0 twice the Moon-Moser term.
double plex_count_bound(int n, int c, int d);

}  // namespace cg
