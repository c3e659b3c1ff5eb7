#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "cg/graph.hpp"

namespace cg {

// Compact graph on at most kMaskGraphMaxN vertices with one adjacency word
// per vertex; the brute-force kernels live on this representation.
inline constexpr int kMaskGraphMaxN = 20;

struct MaskGraph {
    int n = 0;
    std::array<uint32_t, kMaskGraphMaxN> adj{};

    uint32_t full_mask() const { return n == 32 ? ~0u : ((1u << n) - 1); }

    static MaskGraph from_graph(const Graph& g) {
        if (g.n() > kMaskGraphMaxN) throw std::invalid_argument("mask graph limited to " + std::to_string(kMaskGraphMaxN) + " vertices");
        MaskGraph m;
        m.n = g.n();
        for (int v = 0; v < g.n(); ++v) {
            uint32_t a = 0;
            g.neighbors(v).for_each([&](int u) { a |= 1u << u; });
            m.adj[size_t(v)] = a;
        }
        return m;
    }

    // Compacted subgraph induced by the vertices of `mask`; mapping gives
    // new index -> old index.
    static MaskGraph induced(const MaskGraph& g, uint32_t mask, std::array<int, kMaskGraphMaxN>* mapping = nullptr);
};

enum class PredicateKind {
    independent_set,
    clique,
    max_degree,
    plex,
    forest,
    treewidth_le,
    degenerate_le,
    nonedges_le_size,
};

// Subset predicate evaluated on induced subgraphs. All kinds except
// nonedges_le_size are hereditary (closed under induced subgraphs).
struct Predicate {
    PredicateKind kind = PredicateKind::independent_set;
    int param = 0;

    static Predicate independent_set() { return {PredicateKind::independent_set, 0}; }
    static Predicate clique() { return {PredicateKind::clique, 0}; }
    static Predicate max_degree(int d) { return {PredicateKind::max_degree, d}; }
    // (d+1)-plex: every member non-adjacent to at most d others in the set.
    static Predicate plex(int d) { return {PredicateKind::plex, d}; }
    static Predicate forest() { return {PredicateKind::forest, 0}; }
    static Predicate treewidth_le(int t) { return {PredicateKind::treewidth_le, t}; }
    static Predicate degenerate_le(int d) { return {PredicateKind::degenerate_le, d}; }
    static Predicate nonedges_le_size() { return {PredicateKind::nonedges_le_size, 0}; }

    bool hereditary() const { return kind != PredicateKind::nonedges_le_size; }

    std::string name() const;
};

bool eval_predicate(const MaskGraph& g, const Predicate& p, uint32_t mask);
bool eval_predicate(const Graph& g, const Predicate& p, const Bitset& s);

// Exact treewidth of the subgraph induced by mask (elimination-ordering DP).
int treewidth_of_mask(const MaskGraph& g, uint32_t mask);

}  // namespace cg
