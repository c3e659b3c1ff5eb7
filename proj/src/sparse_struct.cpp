#include "cg/sparse_struct.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cg/clique_enum.hpp"

namespace cg {

bool GoodPartition::validate(const Graph& h) const {
    if (parts.empty() || parts.size() != edges.size() + 1) return false;
    if (parts[0].count() > l) return false;
    Bitset anchor_verts(h.n());
    for (auto [a, b] : edges) {
        if (!h.has_edge(a, b)) return false;
        anchor_verts.set(a);
        anchor_verts.set(b);
    }
    Bitset rest = h.all_vertices() - anchor_verts;
    Bitset seen(h.n());
    for (const Bitset& p : parts) {
        if (p.intersects(anchor_verts) || p.intersects(seen)) return false;
        seen |= p;
    }
    if (seen != rest) return false;
    for (size_t i = 1; i < parts.size(); ++i) {
        auto [a, b] = edges[i - 1];
        Bitset ne = h.neighbors(a) | h.neighbors(b);
        if (parts[i].intersects(ne)) return false;
    }
    return true;
}

std::vector<std::pair<KStar, Bitset>> enumerate_proper_kstars(const Graph& g, int k) {
    return enumerate_proper_kstars(g, k, [](const Graph& h) {
        return enumerate_max_independent_sets(h).results;
    });
}

namespace {

// Recursively yields all vertex subsets of size <= k, smallest-first.
void heads_rec(int n, int k, int start, std::vector<int>& cur,
               const std::function<void(const std::vector<int>&)>& visit) {
    visit(cur);
    if (int(cur.size()) == k) return;
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        heads_rec(n, k, v + 1, cur, visit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::pair<KStar, Bitset>> enumerate_proper_kstars(const Graph& g, int k,
                                                              const MisEnumerator& mis) {
    if (k < 1) throw std::invalid_argument("enumerate_proper_kstars: k must be >= 1");
    std::vector<std::pair<KStar, Bitset>> out;
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<int> cur;
    heads_rec(g.n(), k, 0, cur, [&](const std::vector<int>& head_vec) {
        Bitset head = Bitset::from_indices(g.n(), head_vec);
        Bitset removed = head;
        if (int(head_vec.size()) == k) {
            // drop the vertices adjacent to all of the head; tails must miss
            // at least one head vertex to stay proper
            Bitset adj_all = g.all_vertices() - head;
            for (int v : head_vec) adj_all &= g.neighbors(v);
            removed |= adj_all;
        }
        InducedSubgraph sub = induced(g, g.all_vertices() - removed);
        for (const Bitset& b : mis(sub.graph)) {
            Bitset tails(g.n());
            b.for_each([&](int i) { tails.set(sub.index_to_original[size_t(i)]); });
            Bitset s = head | tails;
            if (seen.insert(s).second)
                out.push_back({KStar{head, tails, true}, s});
        }
    });
    return out;
}

std::vector<Bitset> enumerate_good_partition_sets(const Graph& g, const GoodPartitionAnchors& anchors,
                                                  const KeepPredicate& keep) {
    Bitset anchor_verts(g.n());
    for (auto [a, b] : anchors.edges) {
        if (!g.has_edge(a, b)) throw std::invalid_argument("enumerate_good_partition_sets: anchor is not an edge");
        anchor_verts.set(a);
        anchor_verts.set(b);
    }
    if (anchors.a0.intersects(anchor_verts))
        throw std::invalid_argument("enumerate_good_partition_sets: A0 overlaps an anchor edge");

    // Free vertices: outside A0 and the edges, non-adjacent to at least one
    // anchor edge.
    Bitset u = g.all_vertices() - anchor_verts - anchors.a0;
    Bitset free(g.n());
    for (auto [a, b] : anchors.edges) {
        Bitset non = u - (g.neighbors(a) | g.neighbors(b));
        free |= non;
    }
    Bitset base = anchors.a0 | anchor_verts;
    std::vector<int> free_verts = free.to_vector();
    std::vector<Bitset> out;
    size_t count = free_verts.size();
    if (count > 30) throw std::invalid_argument("enumerate_good_partition_sets: too many free vertices");
    for (uint32_t sub = 0; sub < (uint32_t(1) << count); ++sub) {
        Bitset s = base;
        for (size_t i = 0; i < count; ++i)
            if (sub & (uint32_t(1) << i)) s.set(free_verts[i]);
        if (keep(s)) out.push_back(s);
    }
    return out;
}

namespace {

struct MatchingSolver {
    std::vector<uint32_t> adj;
    std::unordered_map<uint32_t, int> memo;

    int solve(uint32_t alive) {
        if (!alive) return 0;
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(alive);
        uint32_t rest = alive & ~(uint32_t(1) << v);
        int best = solve(rest);  // v stays unmatched
        uint32_t nb = adj[size_t(v)] & rest;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            best = std::max(best, 1 + solve(rest & ~(uint32_t(1) << u)));
        }
        memo[alive] = best;
        return best;
    }
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
    if (g.n() > 32) throw std::invalid_argument("maximum_matching: intended for small graphs (n <= 32)");
    MatchingSolver s;
    s.adj.assign(size_t(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        g.neighbors(v).for_each([&](int u) { s.adj[size_t(v)] |= uint32_t(1) << u; });
    uint32_t alive = g.n() == 32 ? ~0u : ((uint32_t(1) << g.n()) - 1);
    std::vector<std::pair<int, int>> out;
    while (alive) {
        int target = s.solve(alive);
        int v = std::countr_zero(alive);
        uint32_t rest = alive & ~(uint32_t(1) << v);
        if (s.solve(rest) == target) {
            alive = rest;
            continue;
        }
        uint32_t nb = s.adj[size_t(v)] & rest;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (1 + s.solve(rest & ~(uint32_t(1) << u)) == target) {
                out.emplace_back(v, u);
                alive = rest & ~(uint32_t(1) << u);
                break;
            }
        }
    }
    return out;
}

namespace {

std::optional<GoodPartition> partition_for_edges(const Graph& h, int l,
                                                 const std::vector<std::pair<int, int>>& edges) {
    Bitset anchor_verts(h.n());
    for (auto [a, b] : edges) {
        anchor_verts.set(a);
        anchor_verts.set(b);
    }
    Bitset rest = h.all_vertices() - anchor_verts;
    // forced into A0: adjacent to every anchor edge
    Bitset forced = rest;
    for (auto [a, b] : edges) forced &= (h.neighbors(a) | h.neighbors(b));
    if (forced.count() > l) return std::nullopt;
    GoodPartition gp;
    gp.edges = edges;
    gp.l = l;
    gp.parts.assign(edges.size() + 1, Bitset(h.n()));
    gp.parts[0] = forced;
    (rest - forced).for_each([&](int v) {
        for (size_t i = 0; i < edges.size(); ++i) {
            auto [a, b] = edges[i];
            if (!h.has_edge(v, a) && !h.has_edge(v, b)) {
                gp.parts[i + 1].set(v);
                return;
            }
        }
    });
    return gp;
}

}  // namespace

std::optional<GoodPartition> detect_good_partition(const Graph& h, int l, int k) {
    if (l < 0 || k < 1) throw std::invalid_argument("detect_good_partition: bad parameters");
    std::vector<std::pair<int, int>> all_edges = h.edge_list();
    if (int(all_edges.size()) < k) return std::nullopt;

    // matching-derived tuples first
    std::vector<std::pair<int, int>> matching = maximum_matching(h);
    if (int(matching.size()) >= k) {
        std::vector<int> idx(size_t(k));
        std::function<std::optional<GoodPartition>(size_t, int)> combos =
            [&](size_t depth, int start) -> std::optional<GoodPartition> {
            if (depth == size_t(k)) {
                std::vector<std::pair<int, int>> tuple;
                for (int i : idx) tuple.push_back(matching[size_t(i)]);
                return partition_for_edges(h, l, tuple);
            }
            for (int i = start; i < int(matching.size()); ++i) {
                idx[depth] = i;
                if (auto r = combos(depth + 1, i + 1)) return r;
            }
            return std::nullopt;
        };
        if (auto r = combos(0, 0)) return r;
    }

    // exhaustive tuples of distinct edges (small-h use only)
    std::vector<int> idx(size_t(k));
    std::function<std::optional<GoodPartition>(size_t, int)> combos =
        [&](size_t depth, int start) -> std::optional<GoodPartition> {
        if (depth == size_t(k)) {
            std::vector<std::pair<int, int>> tuple;
            for (int i : idx) tuple.push_back(all_edges[size_t(i)]);
            return partition_for_edges(h, l, tuple);
        }
        for (int i = start; i < int(all_edges.size()); ++i) {
            idx[depth] = i;
            if (auto r = combos(depth + 1, i + 1)) return r;
        }
        return std::nullopt;
    };
    return combos(0, 0);
}

bool is_proper_kstar(const Graph& h, int k) {
    std::vector<int> cur;
    bool found = false;
    heads_rec(h.n(), k, 0, cur, [&](const std::vector<int>& head_vec) {
        if (found) return;
        Bitset head = Bitset::from_indices(h.n(), head_vec);
        Bitset tails = h.all_vertices() - head;
        bool ok = true;
        tails.for_each([&](int v) {
            if (!ok) return;
            if (h.neighbors(v).intersects(tails)) ok = false;  // tails independent
            else if (h.neighbors(v).intersection_count(head) > k - 1) ok = false;  // proper
        });
        if (ok) found = true;
    });
    return found;
}

}  // namespace cg
