#include "cg/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cg/generators.hpp"
#include "cg/oracle.hpp"

namespace cg {

uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > 7) throw std::invalid_argument("labeled_graph_count: n must be in [0,7]");
    int bits = n * (n - 1) / 2;
    return uint64_t(1) << bits;
}

Graph graph_from_id(int n, uint64_t id) {
    GraphBuilder b(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (id & (uint64_t(1) << k)) b.add_edge(u, v);
    return b.build();
}

uint64_t graph_to_id(const Graph& g) {
    uint64_t id = 0;
    int k = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v, ++k)
            if (g.has_edge(u, v)) id |= uint64_t(1) << k;
    return id;
}

namespace {

void mask_graph_from_id(int n, uint64_t id, MaskGraph& mg) {
    mg.n = n;
    for (int v = 0; v < n; ++v) mg.adj[size_t(v)] = 0;
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (id & (uint64_t(1) << k)) {
                mg.adj[size_t(u)] |= 1u << v;
                mg.adj[size_t(v)] |= 1u << u;
            }
}

// Maximal predicate sets containing prefix_mask; n <= 7 so a flat pass over
// all subsets beats pruning.
long long count_maximal_small(const MaskGraph& mg, const Predicate& p, uint32_t prefix_mask,
                              std::array<uint8_t, 128>& sat) {
    uint32_t total = uint32_t(1) << mg.n;
    for (uint32_t mask = 0; mask < total; ++mask)
        sat[mask] = eval_predicate(mg, p, mask) ? 1 : 0;
    long long count = 0;
    if (p.hereditary()) {
        for (uint32_t mask = 0; mask < total; ++mask) {
            if (!sat[mask] || (mask & prefix_mask) != prefix_mask) continue;
            uint32_t rest = (total - 1) & ~mask;
            bool maximal = true;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (sat[mask | (1u << v)]) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) ++count;
        }
        return count;
    }
    std::array<uint8_t, 128> any_sup{};
    for (uint32_t mask = total - 1;; --mask) {
        uint32_t rest = (total - 1) & ~mask;
        uint8_t up = 0;
        while (rest && !up) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t super = mask | (1u << v);
            up |= uint8_t(sat[super] | any_sup[super]);
        }
        any_sup[mask] = up;
        if (sat[mask] && !up && (mask & prefix_mask) == prefix_mask) ++count;
        if (mask == 0) break;
    }
    return count;
}

double closed_form_bound(const Predicate& p, int total_vertices) {
    switch (p.kind) {
        case PredicateKind::independent_set:
        case PredicateKind::clique:
            return std::pow(3.0, double(total_vertices) / 3.0);
        case PredicateKind::max_degree:
            if (p.param == 1) return std::pow(10.0, double(total_vertices) / 5.0);
            return 0.0;
        case PredicateKind::forest:
        case PredicateKind::degenerate_le:
            if (p.kind == PredicateKind::forest || p.param == 1)
                return std::pow(1.8638, double(total_vertices));
            return 0.0;
        default:
            return 0.0;
    }
}

}  // namespace

BoundRecord max_count_over_all_graphs(int free_n, const Predicate& p, int prefix_size,
                                      int threads, int argmax_cap) {
    int total = free_n + prefix_size;
    if (free_n < 0 || prefix_size < 0 || total < 1 || total > 7)
        throw std::invalid_argument("max_count_over_all_graphs: free_n + prefix_size must be in [1,7]");
    uint64_t graphs = labeled_graph_count(total);
    uint32_t prefix_mask = prefix_size ? ((1u << prefix_size) - 1) : 0;

    struct Shard {
        long long best = -1;
        std::vector<uint64_t> ids;
    };
    int nthreads = std::max(1, threads);
    std::vector<Shard> shards(size_t(nthreads));
    auto work = [&](int ti) {
        uint64_t lo = graphs * uint64_t(ti) / uint64_t(nthreads);
        uint64_t hi = graphs * uint64_t(ti + 1) / uint64_t(nthreads);
        MaskGraph mg;
        std::array<uint8_t, 128> sat{};
        Shard& sh = shards[size_t(ti)];
        for (uint64_t id = lo; id < hi; ++id) {
            mask_graph_from_id(total, id, mg);
            long long c = count_maximal_small(mg, p, prefix_mask, sat);
            if (c > sh.best) {
                sh.best = c;
                sh.ids.assign(1, id);
            } else if (c == sh.best && int(sh.ids.size()) < argmax_cap) {
                sh.ids.push_back(id);
            }
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    BoundRecord rec;
    rec.total_vertices = total;
    rec.prefix_size = prefix_size;
    rec.predicate = p;
    for (const Shard& sh : shards) rec.max_count = std::max(rec.max_count, sh.best);
    for (const Shard& sh : shards) {
        if (sh.best != rec.max_count) continue;
        for (uint64_t id : sh.ids)
            if (int(rec.argmax_graphs.size()) < argmax_cap)
                rec.argmax_graphs.push_back(graph_from_id(total, id));
    }
    rec.bound_value = closed_form_bound(p, total);
    return rec;
}

KappaResult kappa(int d) {
    if (d < 0) throw std::invalid_argument("kappa: d must be >= 0");
    auto poly = [d](double x) { return std::pow(x, d + 4) - 2.0 * std::pow(x, d + 3) + 1.0; };
    double lo = 1.0 + 1e-9, hi = 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        double mid = 0.5 * (lo + hi);
        if (poly(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    KappaResult r;
    r.root = 0.5 * (lo + hi);
    static const double published[5] = {1.618, 1.839, 1.928, 1.966, 1.984};
    r.table = d <= 4 ? published[d] : r.root;
    return r;
}

LemmaCheckReport verify_m1_lemmas(const Graph& g) {
    if (g.n() > 16) throw std::invalid_argument("verify_m1_lemmas: n <= 16 required");
    LemmaCheckReport rep;
    Predicate m1 = Predicate::max_degree(1);
    long long count_g = count_maximal(g, m1);

    // Component product law.
    std::vector<Bitset> comps = components(g);
    if (comps.size() >= 2) {
        for (const Bitset& u : comps) {
            long long inside = count_maximal(induced(g, u).graph, m1);
            long long outside = count_maximal(induced(g, g.all_vertices() - u).graph, m1);
            if (inside * outside != count_g) rep.disconnected_product_ok = false;
        }
    }

    // Twin edge-deletion inequality.
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            Bitset nu = g.neighbors(u);
            nu.reset(v);
            Bitset nv = g.neighbors(v);
            nv.reset(u);
            if (nu != nv) continue;
            ++rep.twin_pairs_checked;
            GraphBuilder b(g.n());
            for (auto [x, y] : g.edge_list())
                if (!((x == u && y == v) || (x == v && y == u))) b.add_edge(x, y);
            if (count_g > count_maximal(b.build(), m1)) rep.twin_inequality_ok = false;
        }

    // Domination: an unmatched member's neighbors all reach outside its
    // closed neighborhood.
    std::vector<Bitset> maximal = enumerate_maximal_bruteforce(g, m1);
    for (const Bitset& s : maximal) {
        s.for_each([&](int v) {
            bool matched = g.neighbors(v).intersects(s);
            if (matched) return;
            g.neighbors(v).for_each([&](int u) {
                Bitset reach = g.neighbors(u) - g.neighbors(v);
                reach.reset(v);
                reach.reset(u);
                if (reach.none()) rep.domination_ok = false;
            });
        });
    }

    // Two-witness characterization vs. plain maximality, over every set with
    // maximum degree <= 1.
    MaskGraph mg = MaskGraph::from_graph(g);
    uint32_t total = g.n() >= 31 ? 0 : (uint32_t(1) << g.n());
    std::vector<uint8_t> sat(size_t(total));
    for (uint32_t mask = 0; mask < total; ++mask) sat[mask] = eval_predicate(mg, m1, mask) ? 1 : 0;
    for (uint32_t mask = 0; mask < total; ++mask) {
        if (!sat[mask]) continue;
        ++rep.matchings_checked;
        bool is_max = true;
        uint32_t rest = (total - 1) & ~mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (sat[mask | (1u << v)]) {
                is_max = false;
                break;
            }
        }
        uint32_t matched = 0;
        uint32_t scan = mask;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (mg.adj[size_t(v)] & mask) matched |= 1u << v;
        }
        uint32_t unmatched = mask & ~matched;
        bool witness = true;
        rest = (total - 1) & ~mask;
        while (rest && witness) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            bool sees_matched = (mg.adj[size_t(w)] & matched) != 0;
            bool sees_two = std::popcount(mg.adj[size_t(w)] & unmatched) >= 2;
            if (!sees_matched && !sees_two) witness = false;
        }
        if (is_max != witness) rep.sees_two_matches_maximality_ok = false;
    }
    return rep;
}

Example1Report verify_example1(int l, int n) {
    Example1Graph eg = gen_example1(l, n);
    if (eg.graph.n() > 16)
        throw std::invalid_argument("verify_example1: c - 1 + n <= 16 required");
    Example1Report rep;
    rep.count = count_maximal(eg.graph, Predicate::nonedges_le_size());
    long long binom = 1;
    for (int i = 0; i < l; ++i) binom = binom * (n - i) / (i + 1);
    rep.threshold = binom;
    rep.satisfied = rep.count >= rep.threshold;
    return rep;
}

}  // namespace cg
