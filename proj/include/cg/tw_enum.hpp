#pragma once

#include <optional>

#include "cg/enum_report.hpp"
#include "cg/graph.hpp"

namespace cg {

enum class EnumMode { superset, exact };

struct TwEnumConfig {
    int t = 1;
    EnumMode mode = EnumMode::superset;
    int tw_solver_limit = 32;
};

// Maximal subgraphs of g whose complement-side treewidth is at most t.
// superset mode: a duplicate-free list of class members guaranteed to
// contain every maximal one (proper (t+1)-star candidates plus good
// (t,2)-partition candidates). exact mode: additionally filtered by
// single-vertex-extension maximality.
EnumerationReport enumerate_bounded_cotw(const Graph& g, const TwEnumConfig& cfg);

// Same candidate machinery for the class "local treewidth of the complement
// side is at most t for radii 1..5"; good (0,2)-partition candidates cover
// the large-diameter and multi-component cases.
EnumerationReport enumerate_bounded_local_cotw(const Graph& g, const TwEnumConfig& cfg);

// 3 n^(t+4) 2^(2(c-1))
double cotw_count_bound(int n, int c, int t);

}  // namespace cg
