#include "cg/clique_enum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "cg/bron_kerbosch.hpp"
#include "cg/closure.hpp"
#include "cg/oracle.hpp"

namespace cg {

namespace {

// Candidate pool with dedup; counts every emission.
struct CandidatePool {
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

// Common neighborhood of the current result set, within the alive prefix.
Bitset extension_set(const Graph& g, const Bitset& alive, const Bitset& r) {
    Bitset ext = alive;
    r.for_each([&](int v) { ext &= g.neighbors(v); });
    ext -= r;
    return ext;
}

}  // namespace

EnumerationReport enumerate_max_cliques(const Graph& g) {
    EnumerationReport rep;
    int n = g.n();
    ClosureNumber cn = closure_number(g);
    rep.bound_value = clique_count_bound(std::max(n, 1), cn.c);
    if (n == 0) {
        rep.results.emplace_back(Bitset(0));
        rep.candidates_generated = 1;
        return rep;
    }

    // Build order: vertices added in ascending (degree, then reversed index)
    // so the peeled vertex is always a maximum-degree one.
    std::vector<int> order(size_t(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a > b;
    });

    Bitset alive(n);
    std::vector<Bitset> results;  // maximal cliques of g[alive]
    results.emplace_back(Bitset(n));
    long long candidates = 1;  // the empty base clique
    long long dup_total = 0, rej_total = 0;

    for (int step = 0; step < n; ++step) {
        int v = order[size_t(step)];
        alive.set(v);
        const Bitset nb_alive = g.neighbors(v) & alive;
        Bitset non_nb = alive;
        non_nb -= g.neighbors(v);
        non_nb.reset(v);

        CandidatePool pool;
        // Type 1: previous maximal cliques survive as candidates.
        for (const Bitset& r : results) pool.emit(r);
        size_t passthrough = results.size();
        pool.emitted = 0;  // pass-throughs were counted when first generated
        pool.duplicates = 0;

        // Type 1b: cliques inside N(v) extend by v; only generated when no
        // non-neighbor of v could extend them instead (that case is covered
        // by the type-2 family below).
        for (size_t i = 0; i < passthrough; ++i) {
            const Bitset& r = pool.fresh[i];
            if (!r.is_subset_of(g.neighbors(v))) continue;
            Bitset ext = extension_set(g, alive, r);
            ext.reset(v);
            ext -= g.neighbors(v);
            if (ext.any()) continue;  // some non-neighbor extends r: type 2 covers it
            Bitset k = r;
            k.set(v);
            pool.emit(k);
        }

        // Type 2: for every non-neighbor u of v, maximal cliques of the
        // common neighborhood (<= c-1 vertices in a c-closed graph).
        non_nb.for_each([&](int u) {
            Bitset common = common_neighbors(g, u, v) & alive;
            InducedSubgraph sub = induced(g, common);
            for (const Bitset& k : bron_kerbosch_max_cliques(sub.graph)) {
                Bitset cand(n);
                cand.set(v);
                k.for_each([&](int i) { cand.set(sub.index_to_original[size_t(i)]); });
                pool.emit(cand);
            }
        });

        candidates += pool.emitted;
        dup_total += pool.duplicates;

        // Keep exactly the maximal cliques of g[alive].
        std::vector<Bitset> next;
        for (const Bitset& cand : pool.fresh) {
            if (extension_set(g, alive, cand).any()) {
                ++rej_total;
                continue;
            }
            next.push_back(cand);
        }
        results = std::move(next);
    }

    sort_canonical(results);
    rep.results = std::move(results);
    rep.candidates_generated = candidates;
    rep.duplicates_removed = dup_total;
    rep.maximality_rejections = rej_total;
    return rep;
}

EnumerationReport enumerate_max_independent_sets(const Graph& g) {
    EnumerationReport rep = enumerate_max_cliques(complement(g));
    return rep;
}

double clique_count_bound(int n, int c) {
    return double(n) * double(n) * std::pow(3.0, double(c - 1) / 3.0);
}

}  // namespace cg
