#include "cg/bron_kerbosch.hpp"

#include <bit>
#include <stdexcept>

namespace cg {

namespace {

void bk(const std::vector<uint64_t>& adj, uint64_t R, uint64_t P, uint64_t X,
        std::vector<uint64_t>& out) {
    if (!P && !X) {
        out.push_back(R);
        return;
    }
    // Pivot: vertex of P | X with the most neighbors in P.
    uint64_t px = P | X;
    int pivot = -1, best = -1;
    uint64_t scan = px;
    while (scan) {
        int u = std::countr_zero(scan);
        scan &= scan - 1;
        int cnt = std::popcount(adj[size_t(u)] & P);
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    uint64_t ext = P & ~adj[size_t(pivot)];
    while (ext) {
        int v = std::countr_zero(ext);
        ext &= ext - 1;
        uint64_t vb = uint64_t(1) << v;
        bk(adj, R | vb, P & adj[size_t(v)], X & adj[size_t(v)], out);
        P &= ~vb;
        X |= vb;
    }
}

}  // namespace

std::vector<uint64_t> bk_maximal_cliques_u64(const std::vector<uint64_t>& adj) {
    int n = int(adj.size());
    std::vector<uint64_t> out;
    if (n == 0) {
        out.push_back(0);
        return out;
    }
    uint64_t full = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    bk(adj, 0, full, 0, out);
    return out;
}

std::vector<Bitset> bron_kerbosch_max_cliques(const Graph& g) {
    if (g.n() > 64) throw std::invalid_argument("bron_kerbosch: limited to 64 vertices");
    std::vector<uint64_t> adj(size_t(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        g.neighbors(v).for_each([&](int u) { adj[size_t(v)] |= uint64_t(1) << u; });
    std::vector<uint64_t> masks = bk_maximal_cliques_u64(adj);
    std::vector<Bitset> out;
    out.reserve(masks.size());
    for (uint64_t m : masks) {
        Bitset b(g.n());
        uint64_t rest = m;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            b.set(v);
        }
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace cg
