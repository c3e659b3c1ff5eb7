#include "cg/tw_enum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cg/closure.hpp"
#include "cg/oracle.hpp"
#include "cg/predicate.hpp"
#include "cg/sparse_struct.hpp"
#include "cg/tw.hpp"

namespace cg {

namespace {

struct Pool {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> fresh;
    long long emitted = 0;
    long long duplicates = 0;

    void emit(const Bitset& s, bool known_member) {
        ++emitted;
        if (seen.insert(s).second) {
            fresh.push_back(s);
            if (known_member) members.insert(s);
        } else {
            ++duplicates;
        }
    }
    std::unordered_set<Bitset, BitsetHash> members;  // class membership pre-established
};

// Memoized class predicate on complement-side subsets.
struct ClassFilter {
    std::function<bool(const Bitset&)> pred;
    std::unordered_map<Bitset, bool, BitsetHash> memo;

    bool operator()(const Bitset& s) {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        bool v = pred(s);
        memo.emplace(s, v);
        return v;
    }
};

int tw_of_subset(const MaskGraph& mg, const Bitset& s) {
    uint32_t mask = 0;
    s.for_each([&](int v) { mask |= 1u << v; });
    return treewidth_of_mask(mg, mask);
}

// Candidate generation shared by the global and local variants: proper
// (t+1)-stars of hb plus, per edge pair, every A0-subset of the doubly
// adjacent vertices and every subset of the rest.
void generate_candidates(const Graph& hb, int t, Pool& pool) {
    for (const auto& [star, s] : enumerate_proper_kstars(hb, t + 1)) pool.emit(s, true);

    std::vector<std::pair<int, int>> edges = hb.edge_list();
    Bitset all = hb.all_vertices();
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            Bitset anchor(hb.n());
            anchor.set(a);
            anchor.set(b);
            anchor.set(c);
            anchor.set(d);
            Bitset outside = all - anchor;
            Bitset ne = hb.neighbors(a) | hb.neighbors(b);
            Bitset nf = hb.neighbors(c) | hb.neighbors(d);
            Bitset forced = outside & ne & nf;   // can only sit in A0
            Bitset free = outside - forced;      // non-adjacent to some anchor edge
            std::vector<int> fv = free.to_vector();
            if (fv.size() > 28) throw std::invalid_argument("enumerate_bounded_cotw: free vertex set too large for exhaustive choice");
            std::vector<int> forced_v = forced.to_vector();
            // A0-part: subsets of forced of size <= t
            std::vector<Bitset> a0s;
            std::vector<int> pick;
            auto rec = [&](auto&& self, size_t idx) -> void {
                a0s.push_back(Bitset::from_indices(hb.n(), pick));
                if (int(pick.size()) == t) return;
                for (size_t x = idx; x < forced_v.size(); ++x) {
                    pick.push_back(forced_v[x]);
                    self(self, x + 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0);
            for (const Bitset& a0 : a0s) {
                for (uint32_t sub = 0;; ++sub) {
                    Bitset s = anchor | a0;
                    for (size_t x = 0; x < fv.size(); ++x)
                        if (sub & (uint32_t(1) << x)) s.set(fv[x]);
                    pool.emit(s, false);
                    if (sub == (uint32_t(1) << fv.size()) - 1) break;
                }
            }
        }
    }
}

EnumerationReport run_enum(const Graph& g, const TwEnumConfig& cfg, ClassFilter& filt) {
    EnumerationReport rep;
    int n = g.n();
    ClosureNumber cn = closure_number(g);
    rep.bound_value = cotw_count_bound(std::max(n, 1), cn.c, cfg.t);
    Graph hb = complement(g);

    Pool pool;
    generate_candidates(hb, cfg.t, pool);
    rep.candidates_generated = pool.emitted;
    rep.duplicates_removed = pool.duplicates;

    std::vector<Bitset> members;
    for (const Bitset& s : pool.fresh) {
        if (pool.members.count(s) || filt(s))
            members.push_back(s);
        else
            ++rep.maximality_rejections;
    }

    if (cfg.mode == EnumMode::superset) {
        sort_canonical(members);
        rep.results = std::move(members);
        return rep;
    }

    Bitset all = g.all_vertices();
    for (const Bitset& s : members) {
        bool extendable = false;
        (all - s).for_each([&](int v) {
            if (extendable) return;
            Bitset t2 = s;
            t2.set(v);
            if (filt(t2)) extendable = true;
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

}  // namespace

EnumerationReport enumerate_bounded_cotw(const Graph& g, const TwEnumConfig& cfg) {
    if (cfg.t < 0) throw std::invalid_argument("enumerate_bounded_cotw: t must be >= 0");
    Graph hb = complement(g);
    if (cfg.mode == EnumMode::exact && g.n() > cfg.tw_solver_limit)
        throw std::invalid_argument("enumerate_bounded_cotw: exact mode needs n within the treewidth solver limit");
    std::optional<MaskGraph> mg;
    if (g.n() <= kMaskGraphMaxN) mg = MaskGraph::from_graph(hb);
    ClassFilter filt;
    filt.pred = [mg, hb, t = cfg.t, lim = cfg.tw_solver_limit](const Bitset& s) {
        if (mg) return tw_of_subset(*mg, s) <= t;
        return treewidth_exact(induced(hb, s).graph, lim).width <= t;
    };
    return run_enum(g, cfg, filt);
}

EnumerationReport enumerate_bounded_local_cotw(const Graph& g, const TwEnumConfig& cfg) {
    if (cfg.t < 0) throw std::invalid_argument("enumerate_bounded_local_cotw: t must be >= 0");
    Graph hb = complement(g);
    ClassFilter filt;
    filt.pred = [hb, t = cfg.t, lim = cfg.tw_solver_limit](const Bitset& s) {
        InducedSubgraph sub = induced(hb, s);
        for (int r = 1; r <= 5; ++r)
            if (local_treewidth(sub.graph, r, lim) > t) return false;
        return true;
    };
    return run_enum(g, cfg, filt);
}

double cotw_count_bound(int n, int c, int t) {
    return 3.0 * std::pow(double(n), double(t) + 4.0) * std::pow(2.0, 2.0 * double(c - 1));
}

}  // namespace cg
