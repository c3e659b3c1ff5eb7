#include "cg/plex_enum.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "cg/clique_enum.hpp"
#include "cg/closure.hpp"
#include "cg/combinatorics.hpp"
#include "cg/oracle.hpp"

namespace cg {

namespace {

void extend_rec(const Graph& g, int d, const std::vector<int>& free_order, size_t idx,
                Bitset& cur, std::vector<int>& deg, const Bitset& universe,
                std::vector<Bitset>& out) {
    if (idx == free_order.size()) {
        // maximal within the universe?
        Bitset rest = universe - cur;
        bool extendable = false;
        rest.for_each([&](int w) {
            if (extendable) return;
            if (g.neighbors(w).intersection_count(cur) > d) return;
            bool ok = true;
            (g.neighbors(w) & cur).for_each([&](int x) { ok = ok && deg[size_t(x)] + 1 <= d; });
            if (ok) extendable = true;
        });
        if (!extendable) out.push_back(cur);
        return;
    }
    int v = free_order[idx];
    // include v if degree budgets allow
    int dv = g.neighbors(v).intersection_count(cur);
    bool can = dv <= d;
    if (can) {
        bool ok = true;
        (g.neighbors(v) & cur).for_each([&](int x) { ok = ok && deg[size_t(x)] + 1 <= d; });
        can = ok;
    }
    if (can) {
        cur.set(v);
        (g.neighbors(v) & cur).for_each([&](int x) {
            if (x != v) ++deg[size_t(x)];
        });
        deg[size_t(v)] = dv;
        extend_rec(g, d, free_order, idx + 1, cur, deg, universe, out);
        (g.neighbors(v) & cur).for_each([&](int x) {
            if (x != v) --deg[size_t(x)];
        });
        deg[size_t(v)] = 0;
        cur.reset(v);
    }
    extend_rec(g, d, free_order, idx + 1, cur, deg, universe, out);
}

}  // namespace

std::vector<Bitset> extend_bounded_degree(const ExtensionInstance& inst) {
    const Graph& g = *inst.host;
    std::vector<Bitset> out;
    // infeasible prefix: empty list signal
    Bitset cur = inst.prefix;
    std::vector<int> deg(size_t(g.n()), 0);
    bool feasible = true;
    cur.for_each([&](int v) {
        int dv = g.neighbors(v).intersection_count(cur);
        deg[size_t(v)] = dv;
        if (dv > inst.degree_cap) feasible = false;
    });
    if (!feasible) return out;
    Bitset universe = inst.prefix | inst.free;
    std::vector<int> free_order = (inst.free - inst.prefix).to_vector();
    extend_rec(g, inst.degree_cap, free_order, 0, cur, deg, universe, out);
    sort_canonical(out);
    return out;
}

EnumerationReport enumerate_max_plexes(const Graph& g, int d) {
    if (d < 0) throw std::invalid_argument("enumerate_max_plexes: d must be >= 0");
    if (d == 0) return enumerate_max_cliques(g);  // 1-plex = clique

    EnumerationReport rep;
    int n = g.n();
    ClosureNumber cn = closure_number(g);
    rep.bound_value = plex_count_bound(std::max(n, 1), cn.c, d);
    if (n == 0) {
        rep.results.emplace_back(Bitset(0));
        rep.candidates_generated = 1;
        return rep;
    }

    Graph h = complement(g);  // degree-at-most-d view
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> candidates;
    auto emit = [&](const Bitset& s) {
        ++rep.candidates_generated;
        if (seen.insert(s).second)
            candidates.push_back(s);
        else
            ++rep.duplicates_removed;
    };

    // Edgeless case: maximal independent sets of h = maximal cliques of g.
    for (const Bitset& s : enumerate_max_cliques(g).results) emit(s);

    // Edge case: anchor every edge uv of h and every retained neighbor set.
    Bitset all = g.all_vertices();
    for (auto [u, v] : h.edge_list()) {
        Bitset nuv = h.neighbors(u) | h.neighbors(v);
        nuv.reset(u);
        nuv.reset(v);
        Bitset base(n);
        base.set(u);
        base.set(v);
        Bitset rfree = all - nuv;
        rfree.reset(u);
        rfree.reset(v);

        if (d == 1) {
            // With an edge uv present neither endpoint tolerates another
            // neighbor, so no retained neighbors exist.
            ExtensionInstance inst{&h, base, rfree, d};
            for (const Bitset& s : extend_bounded_degree(inst)) emit(s);
            continue;
        }

        std::vector<int> nbrs = nuv.to_vector();
        int cap = 2 * d - 2;
        std::vector<int> pick;
        // all subsets of N(u,v) of size <= 2d-2, degree-feasible prefixes only
        auto rec = [&](auto&& self, size_t idx) -> void {
            Bitset prefix = base;
            for (int w : pick) prefix.set(w);
            bool feasible = true;
            prefix.for_each([&](int w) {
                if (h.neighbors(w).intersection_count(prefix) > d) feasible = false;
            });
            if (feasible) {
                ExtensionInstance inst{&h, prefix, rfree, d};
                for (const Bitset& s : extend_bounded_degree(inst)) emit(s);
            }
            if (int(pick.size()) == cap) return;
            for (size_t i = idx; i < nbrs.size(); ++i) {
                pick.push_back(nbrs[size_t(i)]);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }

    // Global filter: degree cap holds by construction; keep the sets that are
    // maximal in h and report them as plexes of g.
    for (const Bitset& s : candidates) {
        bool extendable = false;
        (all - s).for_each([&](int w) {
            if (extendable) return;
            Bitset t = s;
            t.set(w);
            bool ok = h.neighbors(w).intersection_count(s) <= d;
            if (ok)
                (h.neighbors(w) & s).for_each([&](int x) { ok = ok && h.neighbors(x).intersection_count(t) <= d; });
            if (ok) extendable = true;
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

double plex_count_bound(int n, int c, int d) {
    if (d == 0) return 2.0 * std::pow(3.0, double(c - 1) / 3.0);
    if (d == 1) return 2.0 * double(n) * double(n) * std::pow(10.0, double(c - 1) / 5.0);
    double kd = kappa(d).table;
    return 2.0 * std::pow(double(n), 2.0 * d) * std::pow(kd, double(c - 1 + 2 * d));
}

}  // namespace cg
