#pragma once

#include <cstdint>
#include <vector>

#include "cg/graph.hpp"

namespace cg {

// Pivoting branch-and-bound enumeration of all maximal cliques; the
// secondary reference enumerator (n <= 64, single adjacency word).
std::vector<uint64_t> bk_maximal_cliques_u64(const std::vector<uint64_t>& adj);

std::vector<Bitset> bron_kerbosch_max_cliques(const Graph& g);

}  // namespace cg
