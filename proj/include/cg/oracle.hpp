#pragma once

#include <vector>

#include "cg/predicate.hpp"

namespace cg {

// Ground-truth enumeration of all inclusion-maximal S with p(g[S]), by
// exhaustive search. Hereditary kinds use a pruned subset tree and allow
// n <= 20; the non-hereditary kind scans all subsets and allows n <= 16,
// with maximality meaning "no superset of any size satisfies p".
std::vector<Bitset> enumerate_maximal_bruteforce(const Graph& g, const Predicate& p);

long long count_maximal(const Graph& g, const Predicate& p);

// Requires p(g[s]); throws otherwise.
bool is_maximal(const Graph& g, const Bitset& s, const Predicate& p);

// Hereditary kinds only: all S maximal in the class with prefix <= S <= within,
// where maximality is relative to within (no vertex of within extends S).
std::vector<uint32_t> maximal_masks_containing(const MaskGraph& g, const Predicate& p,
                                               uint32_t prefix, uint32_t within);

std::vector<uint32_t> maximal_masks(const MaskGraph& g, const Predicate& p);

void sort_canonical(std::vector<Bitset>& sets);
std::vector<Bitset> masks_to_bitsets(const std::vector<uint32_t>& masks, int n);

}  // namespace cg
