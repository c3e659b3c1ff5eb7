#include "cg/graph.hpp"

#include <algorithm>
#include <queue>

namespace cg {

Graph complement(const Graph& g) {
    GraphBuilder b(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) b.add_edge(u, v);
    return b.build();
}

Bitset closed_neighborhood(const Graph& g, const Bitset& s) {
    if (s.size() != g.n()) throw std::invalid_argument("closed_neighborhood: set universe mismatch");
    Bitset r = s;
    s.for_each([&](int v) { r |= g.neighbors(v); });
    return r;
}

Bitset common_neighbors(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    return g.neighbors(u) & g.neighbors(v);
}

std::vector<Bitset> components(const Graph& g) {
    std::vector<Bitset> comps;
    Bitset seen(g.n());
    for (int s = 0; s < g.n(); ++s) {
        if (seen.test(s)) continue;
        Bitset comp(g.n());
        comp.set(s);
        Bitset frontier(g.n());
        frontier.set(s);
        while (frontier.any()) {
            Bitset next(g.n());
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next -= comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

int diameter(const Graph& g) {
    if (g.n() == 0) return kInfiniteDiameter;
    int best = 0;
    for (int s = 0; s < g.n(); ++s) {
        Bitset reached(g.n());
        reached.set(s);
        Bitset frontier = reached;
        int dist = 0;
        while (true) {
            Bitset next(g.n());
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next -= reached;
            if (next.none()) break;
            reached |= next;
            frontier = next;
            ++dist;
        }
        if (reached.count() != g.n()) return kInfiniteDiameter;
        best = std::max(best, dist);
    }
    return best;
}

InducedSubgraph induced(const Graph& g, const Bitset& s) {
    if (s.size() != g.n()) throw std::invalid_argument("induced: set universe mismatch");
    std::vector<int> map = s.to_vector();
    GraphBuilder b(int(map.size()));
    for (size_t i = 0; i < map.size(); ++i)
        for (size_t j = i + 1; j < map.size(); ++j)
            if (g.has_edge(map[i], map[j])) b.add_edge(int(i), int(j));
    return InducedSubgraph{b.build(), std::move(map)};
}

DegeneracyResult degeneracy(const Graph& g) {
    DegeneracyResult r;
    Bitset alive = g.all_vertices();
    std::vector<int> deg(size_t(g.n()));
    for (int v = 0; v < g.n(); ++v) deg[size_t(v)] = g.degree(v);
    for (int step = 0; step < g.n(); ++step) {
        int best = -1;
        alive.for_each([&](int v) {
            if (best == -1 || deg[size_t(v)] < deg[size_t(best)]) best = v;
        });
        r.d = std::max(r.d, deg[size_t(best)]);
        r.order.push_back(best);
        alive.reset(best);
        (g.neighbors(best) & alive).for_each([&](int u) { --deg[size_t(u)]; });
    }
    return r;
}

Bitset ball(const Graph& g, int v, int r) {
    g.check_vertex(v);
    Bitset reached(g.n());
    reached.set(v);
    Bitset frontier = reached;
    for (int step = 0; step < r && frontier.any(); ++step) {
        Bitset next(g.n());
        frontier.for_each([&](int u) { next |= g.neighbors(u); });
        next -= reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

bool is_connected(const Graph& g) {
    return g.n() <= 1 || components(g).size() == 1;
}

bool induces_forest(const Graph& g, const Bitset& s) {
    // Union-find over the members; a repeated union means a cycle.
    std::vector<int> verts = s.to_vector();
    std::vector<int> parent(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) parent[i] = int(i);
    std::vector<int> pos(size_t(g.n()), -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[size_t(verts[i])] = int(i);
    auto find = [&](int x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    };
    for (int u : verts) {
        bool ok = true;
        (g.neighbors(u) & s).for_each([&](int v) {
            if (!ok || v <= u) return;
            int a = find(pos[size_t(u)]), b = find(pos[size_t(v)]);
            if (a == b) {
                ok = false;
                return;
            }
            parent[size_t(a)] = b;
        });
        if (!ok) return false;
    }
    return true;
}

bool induced_is_degenerate_le(const Graph& g, const Bitset& s, int d) {
    Bitset alive = s;
    std::vector<int> deg(size_t(g.n()), 0);
    s.for_each([&](int v) { deg[size_t(v)] = g.neighbors(v).intersection_count(s); });
    int remaining = s.count();
    while (remaining > 0) {
        int pick = -1;
        alive.for_each([&](int v) {
            if (pick == -1 && deg[size_t(v)] <= d) pick = v;
        });
        if (pick == -1) return false;
        alive.reset(pick);
        --remaining;
        (g.neighbors(pick) & alive).for_each([&](int u) { --deg[size_t(u)]; });
    }
    return true;
}

}  // namespace cg
