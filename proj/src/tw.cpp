#include "cg/tw.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cg {

DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    int bags = int(td.bags.size());
    for (const Bitset& b : td.bags)
        if (b.size() != g.n()) return {false, "bag universe mismatch"};
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || a >= bags || b < 0 || b >= bags) return {false, "tree edge out of range"};
    // The tree must actually be a tree on the bag indices (when > 1 bag).
    if (bags > 0) {
        std::vector<int> parent(size_t(bags));
        for (int i = 0; i < bags; ++i) parent[size_t(i)] = i;
        auto find = [&](int x) {
            while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            return x;
        };
        int merges = 0;
        for (auto [a, b] : td.tree_edges) {
            int ra = find(a), rb = find(b);
            if (ra == rb) return {false, "bag tree contains a cycle"};
            parent[size_t(ra)] = rb;
            ++merges;
        }
        if (merges != bags - 1) return {false, "bag tree is disconnected"};
    }

    Bitset covered(g.n());
    for (const Bitset& b : td.bags) covered |= b;
    if (covered.count() != g.n()) return {false, "vertex not covered by any bag"};

    for (auto [u, v] : g.edge_list()) {
        bool found = false;
        for (const Bitset& b : td.bags)
            if (b.test(u) && b.test(v)) {
                found = true;
                break;
            }
        if (!found) return {false, "edge endpoints never co-occur in a bag"};
    }

    // Running intersection: for each vertex, bags containing it induce a
    // connected subtree.
    std::vector<std::vector<int>> bag_adj(size_t(bags));
    for (auto [a, b] : td.tree_edges) {
        bag_adj[size_t(a)].push_back(b);
        bag_adj[size_t(b)].push_back(a);
    }
    for (int v = 0; v < g.n(); ++v) {
        int start = -1, total = 0;
        for (int i = 0; i < bags; ++i)
            if (td.bags[size_t(i)].test(v)) {
                if (start < 0) start = i;
                ++total;
            }
        if (start < 0) continue;
        std::vector<char> seen(size_t(bags), 0);
        std::vector<int> stack{start};
        seen[size_t(start)] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            ++reached;
            for (int j : bag_adj[size_t(i)])
                if (!seen[size_t(j)] && td.bags[size_t(j)].test(v)) {
                    seen[size_t(j)] = 1;
                    stack.push_back(j);
                }
        }
        if (reached != total) return {false, "running-intersection violated for a vertex"};
    }
    return {};
}

namespace {

uint32_t adj_mask32(const Graph& g, int v) {
    uint32_t a = 0;
    g.neighbors(v).for_each([&](int u) { a |= uint32_t(1) << u; });
    return a;
}

// Vertices outside S u {v} reachable from v through S.
uint32_t reach_through32(const std::vector<uint32_t>& adj, int v, uint32_t S) {
    uint32_t r = adj[size_t(v)];
    while (true) {
        uint32_t grow = r;
        uint32_t scan = r & S;
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            grow |= adj[size_t(w)];
        }
        if (grow == r) break;
        r = grow;
    }
    return r & ~S & ~(uint32_t(1) << v);
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, int limit) {
    int n = g.n();
    if (n > limit || n > 32)
        throw std::invalid_argument("treewidth_exact: size limit exceeded (n=" + std::to_string(n) +
                                    ", limit=" + std::to_string(std::min(limit, 32)) +
                                    "); the subset table needs 2^n entries");
    TreewidthResult res;
    if (n == 0) {
        res.width = -1;
        return res;
    }
    std::vector<uint32_t> adj(size_t(n));
    for (int v = 0; v < n; ++v) adj[size_t(v)] = adj_mask32(g, v);
    uint64_t states = uint64_t(1) << n;
    uint32_t full = n == 32 ? ~0u : ((uint32_t(1) << n) - 1);
    std::vector<uint8_t> f(states, 0), choice(states, 0);
    for (uint64_t Su = 1; Su < states; ++Su) {
        uint32_t S = uint32_t(Su);
        uint8_t best = 255;
        uint8_t pick = 0;
        uint32_t scan = S;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            uint32_t Sv = S & ~(uint32_t(1) << v);
            uint8_t q = uint8_t(std::popcount(reach_through32(adj, v, Sv) & ~S));
            uint8_t cand = std::max(f[Sv], q);
            if (cand < best) {
                best = cand;
                pick = uint8_t(v);
            }
        }
        f[Su] = best;
        choice[Su] = pick;
    }
    res.width = f[states - 1];

    // Recover an optimal elimination order (choice[S] is eliminated last
    // among S), then build bags from the fill-in it induces.
    std::vector<int> elim(size_t(n));
    uint32_t S = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        int v = choice[S];
        elim[size_t(pos)] = v;
        S &= ~(uint32_t(1) << v);
    }
    std::vector<int> pos_of(size_t(n));
    for (int i = 0; i < n; ++i) pos_of[size_t(elim[size_t(i)])] = i;

    std::vector<uint32_t> fill = adj;
    res.decomposition.bags.assign(size_t(n), Bitset(n));
    uint32_t eliminated = 0;
    for (int i = 0; i < n; ++i) {
        int v = elim[size_t(i)];
        uint32_t later = fill[size_t(v)] & ~eliminated;
        Bitset bag(n);
        bag.set(v);
        uint32_t scan = later;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            bag.set(u);
        }
        res.decomposition.bags[size_t(i)] = bag;
        // make the later neighbors a clique (fill edges)
        scan = later;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            fill[size_t(u)] |= later & ~(uint32_t(1) << u);
        }
        // parent bag: earliest-eliminated later neighbor, else next bag
        if (later) {
            int parent = -1;
            scan = later;
            while (scan) {
                int u = std::countr_zero(scan);
                scan &= scan - 1;
                if (parent < 0 || pos_of[size_t(u)] < pos_of[size_t(parent)]) parent = u;
            }
            res.decomposition.tree_edges.emplace_back(i, pos_of[size_t(parent)]);
        } else if (i + 1 < n) {
            res.decomposition.tree_edges.emplace_back(i, i + 1);
        }
        eliminated |= uint32_t(1) << v;
    }
    return res;
}

int local_treewidth(const Graph& g, int r, int limit) {
    if (r < 0) throw std::invalid_argument("local_treewidth: r must be >= 0");
    int best = -1;
    for (int v = 0; v < g.n(); ++v) {
        InducedSubgraph sub = induced(g, ball(g, v, r));
        best = std::max(best, treewidth_exact(sub.graph, limit).width);
    }
    return best;
}

LocalTWProfile local_tw_profile(const Graph& g, int r_max, int limit) {
    LocalTWProfile p;
    for (int r = 1; r <= r_max; ++r) p.values[r] = local_treewidth(g, r, limit);
    return p;
}

}  // namespace cg
