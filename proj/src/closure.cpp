#include "cg/closure.hpp"

#include <stdexcept>

namespace cg {

ClosureNumber closure_number(const Graph& g) {
    ClosureNumber r;
    int best = -1;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            int common = g.neighbors(u).intersection_count(g.neighbors(v));
            if (common > best) {
                best = common;
                r.witness = std::make_pair(u, v);
            }
        }
    r.c = best < 0 ? 1 : best + 1;
    if (best < 0) r.witness.reset();
    return r;
}

CoClosureCheck co_closure_check(const Graph& g, int c) {
    if (c < 1) throw std::invalid_argument("co_closure_check: c must be >= 1");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            Bitset pair(g.n());
            pair.set(u);
            pair.set(v);
            int outside = g.n() - closed_neighborhood(g, pair).count();
            if (outside > c - 1) return CoClosureCheck{false, std::make_pair(u, v)};
        }
    return CoClosureCheck{};
}

Graph closure_augment(const Graph& g, int c) {
    if (c < 1) throw std::invalid_argument("closure_augment: c must be >= 1");
    GraphBuilder b(g.n());
    for (auto [u, v] : g.edge_list()) b.add_edge(u, v);
    Graph cur = b.build();
    while (true) {
        int bu = -1, bv = -1;
        for (int u = 0; u < cur.n() && bu < 0; ++u)
            for (int v = u + 1; v < cur.n(); ++v) {
                if (cur.has_edge(u, v)) continue;
                if (cur.neighbors(u).intersection_count(cur.neighbors(v)) >= c) {
                    bu = u;
                    bv = v;
                    break;
                }
            }
        if (bu < 0) return cur;
        GraphBuilder nb(cur.n());
        for (auto [u, v] : cur.edge_list()) nb.add_edge(u, v);
        nb.add_edge(bu, bv);
        cur = nb.build();
    }
}

}  // namespace cg
