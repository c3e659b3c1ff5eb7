#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cg/bitset.hpp"

namespace cg {

// Immutable undirected simple graph on vertices 0..n-1 with bitset adjacency.
// Isolated vertices are first-class; self-loops are rejected at build time.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), m_(0), adj_(size_t(n), Bitset(n)) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_internal(u, v);
        return g;
    }

    int n() const { return n_; }
    long long m() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[size_t(u)].test(v);
    }
    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[size_t(v)];
    }
    int degree(int v) const { return neighbors(v).count(); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    Bitset all_vertices() const {
        Bitset b(n_);
        b.fill_all();
        return b;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(size_t(m_));
        for (int u = 0; u < n_; ++u)
            adj_[size_t(u)].for_each([&](int v) {
                if (u < v) e.emplace_back(u, v);
            });
        return e;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("graph: vertex index " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

private:
    friend class GraphBuilder;

    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (adj_[size_t(u)].test(v)) return;
        adj_[size_t(u)].set(v);
        adj_[size_t(v)].set(u);
        ++m_;
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// Mutable construction helper; Graph itself stays immutable once built.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    void add_edge(int u, int v) { g_.add_edge_internal(u, v); }
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int n() const { return g_.n(); }
    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

inline constexpr int kInfiniteDiameter = 1 << 30;

Graph complement(const Graph& g);

// N[s] = s together with every neighbor of a member.
Bitset closed_neighborhood(const Graph& g, const Bitset& s);
Bitset common_neighbors(const Graph& g, int u, int v);
std::vector<Bitset> components(const Graph& g);
// kInfiniteDiameter when disconnected or empty.
int diameter(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> index_to_original;  // new index -> original vertex
};
InducedSubgraph induced(const Graph& g, const Bitset& s);

struct DegeneracyResult {
    int d = 0;
    std::vector<int> order;  // peeling witness, removal order
};
DegeneracyResult degeneracy(const Graph& g);

// Vertices at distance <= r from v, including v.
Bitset ball(const Graph& g, int v, int r);

bool is_connected(const Graph& g);
bool induces_forest(const Graph& g, const Bitset& s);
bool induced_is_degenerate_le(const Graph& g, const Bitset& s, int d);

}  // namespace cg
