#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cg/graph.hpp"

namespace cg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseResult {
    Graph graph;
    std::vector<std::string> warnings;  // e.g. duplicate edges (deduped)
};

// Edge-list text: first line "n m", then one "u v" pair per line, 0-indexed.
// Duplicate edges warn and dedupe; self-loops are rejected.
ParseResult parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// DIMACS: "p edge n m" header, "e u v" edges (1-indexed), "c" comments.
ParseResult parse_dimacs(const std::string& text);

}  // namespace cg
