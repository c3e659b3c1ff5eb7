#include "cg/degen_forest_enum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cg/clique_enum.hpp"
#include "cg/closure.hpp"
#include "cg/oracle.hpp"
#include "cg/sparse_struct.hpp"

namespace cg {

namespace {

struct Pool {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> fresh;
    long long emitted = 0;
    long long duplicates = 0;

    void emit(const Bitset& s) {
        ++emitted;
        if (seen.insert(s).second)
            fresh.push_back(s);
        else
            ++duplicates;
    }
};

// Maximal p-sets of hb restricted to a kernel, cached per kernel mask.
struct KernelOracle {
    const Graph& hb;
    Predicate pred;
    std::unordered_map<Bitset, std::vector<Bitset>, BitsetHash> cache;

    const std::vector<Bitset>& run(const Bitset& kernel) {
        auto it = cache.find(kernel);
        if (it != cache.end()) return it->second;
        InducedSubgraph sub = induced(hb, kernel);
        if (sub.graph.n() > kMaskGraphMaxN)
            throw std::invalid_argument("kernel exceeds the brute-force limit (" + std::to_string(sub.graph.n()) +
                                        " > " + std::to_string(kMaskGraphMaxN) +
                                        " vertices); reduce c or d");
        MaskGraph mg = MaskGraph::from_graph(sub.graph);
        std::vector<uint32_t> masks = maximal_masks_containing(mg, pred, 0, mg.full_mask());
        std::vector<Bitset> out;
        out.reserve(masks.size());
        for (uint32_t m : masks) {
            Bitset s(hb.n());
            uint32_t rest = m;
            while (rest) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                s.set(sub.index_to_original[size_t(i)]);
            }
            out.push_back(std::move(s));
        }
        return cache.emplace(kernel, std::move(out)).first->second;
    }
};

// All tuples of `want` pairwise disjoint edges, visited via callback.
void disjoint_edge_tuples(const std::vector<std::pair<int, int>>& edges, int n, int want,
                          const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
    std::vector<std::pair<int, int>> cur;
    Bitset used(n);
    std::function<void(size_t)> rec = [&](size_t start) {
        if (int(cur.size()) == want) {
            visit(cur);
            return;
        }
        for (size_t i = start; i < edges.size(); ++i) {
            auto [a, b] = edges[i];
            if (used.test(a) || used.test(b)) continue;
            used.set(a);
            used.set(b);
            cur.push_back(edges[i]);
            rec(i + 1);
            cur.pop_back();
            used.reset(a);
            used.reset(b);
        }
    };
    rec(0);
}

}  // namespace

EnumerationReport enumerate_bounded_codegen(const Graph& g, const DegenConfig& cfg) {
    int d = cfg.d;
    if (d < 1) throw std::invalid_argument("enumerate_bounded_codegen: d must be >= 1");
    EnumerationReport rep;
    int n = g.n();
    ClosureNumber cn = closure_number(g);
    DegenBound db = degen_count_bounds(std::max(n, 1), cn.c, d);
    rep.bound_value = db.value;
    rep.bound_from_paper = db.from_paper;
    if (n == 0) {
        rep.results.emplace_back(Bitset(0));
        rep.candidates_generated = 1;
        return rep;
    }
    Graph hb = complement(g);
    Pool pool;

    // (a) proper (4d+1)-stars, kept when d-degenerate.
    for (const auto& [star, s] : enumerate_proper_kstars(hb, 4 * d + 1)) pool.emit(s);

    // (b) anchored kernels per 2d-tuple of disjoint edges and A0 subset of
    // the vertices adjacent to every anchor edge.
    KernelOracle ko{hb, Predicate::degenerate_le(d), {}};
    std::unordered_set<Bitset, BitsetHash> kernels_done;
    Bitset all = hb.all_vertices();
    disjoint_edge_tuples(hb.edge_list(), n, 2 * d, [&](const std::vector<std::pair<int, int>>& tuple) {
        Bitset anchor(n);
        for (auto [a, b] : tuple) {
            anchor.set(a);
            anchor.set(b);
        }
        Bitset outside = all - anchor;
        Bitset forced = outside;
        for (auto [a, b] : tuple) forced &= (hb.neighbors(a) | hb.neighbors(b));
        Bitset base = (outside - forced) | anchor;

        std::vector<Bitset> kernels;
        if (forced.count() <= 4 * d) {
            kernels.push_back(base | forced);
        } else {
            std::vector<int> fv = forced.to_vector();
            std::vector<int> pick;
            auto rec = [&](auto&& self, size_t idx) -> void {
                Bitset k = base;
                for (int v : pick) k.set(v);
                kernels.push_back(k);
                if (int(pick.size()) == 4 * d) return;
                for (size_t i = idx; i < fv.size(); ++i) {
                    pick.push_back(fv[i]);
                    self(self, i + 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0);
        }
        for (const Bitset& k : kernels) {
            if (!kernels_done.insert(k).second) continue;
            for (const Bitset& s : ko.run(k)) pool.emit(s);
        }
    });

    rep.candidates_generated = pool.emitted;
    rep.duplicates_removed = pool.duplicates;

    // Global filter: class membership (peeling) plus single-vertex maximality.
    for (const Bitset& s : pool.fresh) {
        if (!induced_is_degenerate_le(hb, s, d)) {
            ++rep.maximality_rejections;
            continue;
        }
        bool extendable = false;
        (all - s).for_each([&](int v) {
            if (extendable) return;
            Bitset t = s;
            t.set(v);
            if (induced_is_degenerate_le(hb, t, d)) extendable = true;
        });
        if (extendable) {
            ++rep.maximality_rejections;
            continue;
        }
        rep.results.push_back(s);
    }
    sort_canonical(rep.results);
    return rep;
}

EnumerationReport enumerate_max_coforests(const Graph& g) {
    EnumerationReport rep;
    int n = g.n();
    ClosureNumber cn = closure_number(g);
    rep.bound_value = forest_count_bound(std::max(n, 1), cn.c);
    if (n == 0) {
        rep.results.emplace_back(Bitset(0));
        rep.candidates_generated = 1;
        return rep;
    }
    Graph hb = complement(g);
    Pool pool;
    Bitset all = hb.all_vertices();

    // (a) maximal stars: each center plus a maximal independent set of the rest.
    for (int v = 0; v < n; ++v) {
        Bitset rest = all;
        rest.reset(v);
        InducedSubgraph sub = induced(hb, rest);
        for (const Bitset& b : enumerate_max_independent_sets(sub.graph).results) {
            Bitset s(n);
            s.set(v);
            b.for_each([&](int i) { s.set(sub.index_to_original[size_t(i)]); });
            pool.emit(s);
        }
    }

    KernelOracle ko{hb, Predicate::forest(), {}};
    std::vector<std::pair<int, int>> edges = hb.edge_list();

    // (b) forests with two non-trivial components: edges e=ab and f=cd with
    // cd outside N[a,b]; the kernel is the union of the two non-neighborhoods.
    for (auto [a, b] : edges) {
        Bitset nab(n);
        nab.set(a);
        nab.set(b);
        Bitset vab = all - closed_neighborhood(hb, nab);  // non-adjacent to a and b
        std::vector<int> rv = vab.to_vector();
        for (size_t i = 0; i < rv.size(); ++i)
            for (size_t j = i + 1; j < rv.size(); ++j) {
                int c = rv[i], dd = rv[j];
                if (!hb.has_edge(c, dd)) continue;
                Bitset ncd(n);
                ncd.set(c);
                ncd.set(dd);
                Bitset vcd = all - closed_neighborhood(hb, ncd);
                Bitset kernel = vab | vcd;
                kernel.set(a);
                kernel.set(b);
                kernel.set(c);
                kernel.set(dd);
                Bitset prefix(n);
                prefix.set(a);
                prefix.set(b);
                prefix.set(c);
                prefix.set(dd);
                for (const Bitset& s : ko.run(kernel)) {
                    if (prefix.is_subset_of(s)) pool.emit(s);
                }
            }
    }

    // (c) forests containing a path on four vertices a-b-c-d: anchored at an
    // induced P3 (a,b,c) and a vertex d adjacent to c but not to a,b.
    for (int b = 0; b < n; ++b) {
        std::vector<int> nb = hb.neighbors(b).to_vector();
        for (int a : nb)
            for (int c : nb) {
                if (a == c || hb.has_edge(a, c)) continue;
                Bitset nab(n);
                nab.set(a);
                nab.set(b);
                Bitset vab = all - closed_neighborhood(hb, nab);
                Bitset dcands = vab & hb.neighbors(c);
                dcands.for_each([&](int dd) {
                    Bitset ncd(n);
                    ncd.set(c);
                    ncd.set(dd);
                    Bitset vcd = all - closed_neighborhood(hb, ncd);
                    Bitset kernel = vab | vcd;
                    kernel.set(b);
                    kernel.set(c);
                    Bitset prefix(n);
                    prefix.set(a);
                    prefix.set(b);
                    prefix.set(c);
                    prefix.set(dd);
                    for (const Bitset& s : ko.run(kernel)) {
                        if (prefix.is_subset_of(s)) pool.emit(s);
                    }
                });
            }
    }

    rep.candidates_generated = pool.emitted;
    rep.duplicates_removed = pool.duplicates;

    for (const Bitset& s : pool.fresh) {
        bool extendable = false;
        (all - s).for_each([&](int v) {
            if (extendable) return;
            Bitset t = s;
            t.set(v);
            if (induces_forest(hb, t)) extendable = true;
        });
        if (extendable) {
            ++rep.maximality_rejections;
            continue;
        }
        rep.results.push_back(s);
    }
    sort_canonical(rep.results);
    return rep;
}

DegenBound degen_count_bounds(int n, int c, int d) {
    DegenBound b;
    b.from_paper = d == 1;
    b.value = std::pow(double(n), 8.0 * d) * std::pow(1.8638, 2.0 * double(d) * double(c));
    return b;
}

double forest_count_bound(int n, int c) {
    return 3.0 * std::pow(double(n), 3.0) * double(c - 1) * std::pow(1.8638, 2.0 * c - 3.0);
}

}  // namespace cg
