#pragma once

#include <vector>

#include "cg/bitset.hpp"

namespace cg {

// Output of every enumerator: deduplicated maximal sets in canonical order
// plus the counters the counting bounds are checked against.
struct EnumerationReport {
    std::vector<Bitset> results;
    long long candidates_generated = 0;
    long long duplicates_removed = 0;
    long long maximality_rejections = 0;
    double bound_value = 0.0;
    bool bound_from_paper = true;
};

}  // namespace cg
