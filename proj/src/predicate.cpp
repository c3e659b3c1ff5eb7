#include "cg/predicate.hpp"

#include <bit>
#include <vector>

namespace cg {

MaskGraph MaskGraph::induced(const MaskGraph& g, uint32_t mask, std::array<int, kMaskGraphMaxN>* mapping) {
    MaskGraph r;
    std::array<int, kMaskGraphMaxN> old_of{};
    std::array<int, kMaskGraphMaxN> new_of{};
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (mask & (1u << v)) {
            old_of[size_t(k)] = v;
            new_of[size_t(v)] = k;
            ++k;
        }
    r.n = k;
    for (int i = 0; i < k; ++i) {
        uint32_t a = g.adj[size_t(old_of[size_t(i)])] & mask;
        uint32_t out = 0;
        while (a) {
            int v = std::countr_zero(a);
            a &= a - 1;
            out |= 1u << new_of[size_t(v)];
        }
        r.adj[size_t(i)] = out;
    }
    if (mapping) *mapping = old_of;
    return r;
}

std::string Predicate::name() const {
    switch (kind) {
        case PredicateKind::independent_set: return "independent-set";
        case PredicateKind::clique: return "clique";
        case PredicateKind::max_degree: return "max-degree(" + std::to_string(param) + ")";
        case PredicateKind::plex: return "plex(" + std::to_string(param + 1) + ")";
        case PredicateKind::forest: return "forest";
        case PredicateKind::treewidth_le: return "treewidth<=" + std::to_string(param);
        case PredicateKind::degenerate_le: return "degenerate<=" + std::to_string(param);
        case PredicateKind::nonedges_le_size: return "nonedges<=size";
    }
    return "?";
}

namespace {

bool mask_is_forest(const MaskGraph& g, uint32_t mask) {
    // Union-find over the members; fixed-size arrays keep this cheap.
    std::array<int8_t, kMaskGraphMaxN> parent{};
    for (int i = 0; i < g.n; ++i) parent[size_t(i)] = int8_t(i);
    auto find = [&](int x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    };
    uint32_t rest = mask;
    while (rest) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        uint32_t nb = g.adj[size_t(u)] & mask & ~((1u << u) | ((1u << u) - 1));
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            int a = find(u), b = find(v);
            if (a == b) return false;
            parent[size_t(a)] = int8_t(b);
        }
    }
    return true;
}

bool mask_is_degenerate_le(const MaskGraph& g, uint32_t mask, int d) {
    uint32_t alive = mask;
    std::array<int8_t, kMaskGraphMaxN> deg{};
    uint32_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        deg[size_t(v)] = int8_t(std::popcount(g.adj[size_t(v)] & mask));
    }
    while (alive) {
        uint32_t scan = alive;
        int pick = -1;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (deg[size_t(v)] <= d) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return false;
        alive &= ~(1u << pick);
        uint32_t nb = g.adj[size_t(pick)] & alive;
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            --deg[size_t(v)];
        }
    }
    return true;
}

// Vertices outside S u {v} reachable from v by a path whose internal
// vertices all lie in S.
uint32_t reach_through(const MaskGraph& g, int v, uint32_t S) {
    uint32_t r = g.adj[size_t(v)];
    while (true) {
        uint32_t grow = r;
        uint32_t scan = r & S;
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            grow |= g.adj[size_t(w)];
        }
        if (grow == r) break;
        r = grow;
    }
    return r & ~S & ~(1u << v);
}

}  // namespace

bool eval_predicate(const MaskGraph& g, const Predicate& p, uint32_t mask) {
    switch (p.kind) {
        case PredicateKind::independent_set: {
            uint32_t rest = mask;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (g.adj[size_t(v)] & mask) return false;
            }
            return true;
        }
        case PredicateKind::clique: {
            uint32_t rest = mask;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if ((g.adj[size_t(v)] & mask) != (mask ^ (1u << v))) return false;
            }
            return true;
        }
        case PredicateKind::max_degree: {
            uint32_t rest = mask;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (std::popcount(g.adj[size_t(v)] & mask) > p.param) return false;
            }
            return true;
        }
        case PredicateKind::plex: {
            int k = std::popcount(mask);
            uint32_t rest = mask;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (std::popcount(g.adj[size_t(v)] & mask) < k - 1 - p.param) return false;
            }
            return true;
        }
        case PredicateKind::forest:
            return mask_is_forest(g, mask);
        case PredicateKind::treewidth_le:
            return treewidth_of_mask(g, mask) <= p.param;
        case PredicateKind::degenerate_le:
            return mask_is_degenerate_le(g, mask, p.param);
        case PredicateKind::nonedges_le_size: {
            int k = std::popcount(mask);
            long long deg_sum = 0;
            uint32_t rest = mask;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                deg_sum += std::popcount(g.adj[size_t(v)] & mask);
            }
            long long nonedges = (long long)k * (k - 1) / 2 - deg_sum / 2;
            return nonedges <= k;
        }
    }
    return false;
}

bool eval_predicate(const Graph& g, const Predicate& p, const Bitset& s) {
    if (g.n() <= kMaskGraphMaxN) {
        MaskGraph mg = MaskGraph::from_graph(g);
        uint32_t mask = 0;
        s.for_each([&](int v) { mask |= 1u << v; });
        return eval_predicate(mg, p, mask);
    }
    // Large-graph fallback for the cheap kinds.
    switch (p.kind) {
        case PredicateKind::independent_set: {
            bool ok = true;
            s.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(s); });
            return ok;
        }
        case PredicateKind::clique: {
            int k = s.count();
            bool ok = true;
            s.for_each([&](int v) { ok = ok && g.neighbors(v).intersection_count(s) == k - 1; });
            return ok;
        }
        case PredicateKind::max_degree: {
            bool ok = true;
            s.for_each([&](int v) { ok = ok && g.neighbors(v).intersection_count(s) <= p.param; });
            return ok;
        }
        case PredicateKind::plex: {
            int k = s.count();
            bool ok = true;
            s.for_each([&](int v) { ok = ok && g.neighbors(v).intersection_count(s) >= k - 1 - p.param; });
            return ok;
        }
        case PredicateKind::forest:
            return induces_forest(g, s);
        case PredicateKind::degenerate_le:
            return induced_is_degenerate_le(g, s, p.param);
        case PredicateKind::nonedges_le_size: {
            long long k = s.count(), deg_sum = 0;
            s.for_each([&](int v) { deg_sum += g.neighbors(v).intersection_count(s); });
            return k * (k - 1) / 2 - deg_sum / 2 <= k;
        }
        case PredicateKind::treewidth_le:
            throw std::invalid_argument("treewidth predicate limited to " + std::to_string(kMaskGraphMaxN) + " vertices");
    }
    return false;
}

int treewidth_of_mask(const MaskGraph& g, uint32_t mask) {
    std::array<int, kMaskGraphMaxN> old_of{};
    MaskGraph h = MaskGraph::induced(g, mask, &old_of);
    int k = h.n;
    if (k == 0) return -1;  // width of the empty decomposition
    uint32_t full = (1u << k) - 1;
    // f[S] = min over orderings eliminating S first of the max elimination
    // degree, where the degree counts vertices outside S reachable through S.
    std::vector<uint8_t> f(size_t(1) << k, 0);
    for (uint32_t S = 1; S <= full; ++S) {
        uint8_t best = 255;
        uint32_t scan = S;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            uint32_t Sv = S & ~(1u << v);
            uint8_t q = uint8_t(std::popcount(reach_through(h, v, Sv) & ~S));
            uint8_t cand = std::max(f[Sv], q);
            if (cand < best) best = cand;
        }
        f[S] = best;
    }
    return f[full];
}

}  // namespace cg
