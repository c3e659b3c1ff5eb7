#include "cg/oracle.hpp"

#include <algorithm>
#include <bit>

namespace cg {

namespace {

constexpr int kHereditaryLimit = 20;
constexpr int kNonHereditaryLimit = 16;

// Lazily memoized predicate over subsets; each mask is evaluated once.
struct PredCache {
    const MaskGraph& g;
    const Predicate& p;
    std::vector<int8_t> memo;  // -1 unknown, 0 false, 1 true

    PredCache(const MaskGraph& gg, const Predicate& pp) : g(gg), p(pp), memo(size_t(1) << gg.n, -1) {}

    bool operator()(uint32_t mask) {
        int8_t& slot = memo[mask];
        if (slot < 0) slot = eval_predicate(g, p, mask) ? 1 : 0;
        return slot == 1;
    }
};

// DFS over the subset tree restricted to p-true sets (hereditary pruning).
// Emits every p-true mask with prefix <= mask <= within.
template <typename F>
void dfs_hereditary(PredCache& pc, uint32_t prefix, uint32_t within, F&& emit) {
    std::vector<int> free_verts;
    uint32_t free_mask = within & ~prefix;
    while (free_mask) {
        int v = std::countr_zero(free_mask);
        free_mask &= free_mask - 1;
        free_verts.push_back(v);
    }
    // iterative stack of (mask, next free index)
    struct Frame {
        uint32_t mask;
        size_t idx;
    };
    std::vector<Frame> stack;
    stack.push_back({prefix, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        emit(f.mask);
        for (size_t i = f.idx; i < free_verts.size(); ++i) {
            uint32_t next = f.mask | (1u << free_verts[i]);
            if (pc(next)) stack.push_back({next, i + 1});
        }
    }
}

}  // namespace

std::vector<uint32_t> maximal_masks_containing(const MaskGraph& g, const Predicate& p,
                                               uint32_t prefix, uint32_t within) {
    if (!p.hereditary())
        throw std::invalid_argument("maximal_masks_containing requires a hereditary predicate");
    PredCache pc(g, p);
    std::vector<uint32_t> out;
    if (!pc(prefix)) return out;
    dfs_hereditary(pc, prefix, within, [&](uint32_t mask) {
        uint32_t candidates = within & ~mask;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (pc(mask | (1u << v))) return;  // extendable
        }
        out.push_back(mask);
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<uint32_t> maximal_masks(const MaskGraph& g, const Predicate& p) {
    uint32_t full = g.full_mask();
    if (p.hereditary()) return maximal_masks_containing(g, p, 0, full);
    // Full scan; maximal = satisfying with no satisfying strict superset.
    size_t total = size_t(1) << g.n;
    std::vector<uint8_t> sat(total), any_sup(total, 0);
    for (uint32_t mask = 0; mask < total; ++mask) sat[mask] = eval_predicate(g, p, mask) ? 1 : 0;
    std::vector<uint32_t> out;
    for (uint32_t mask = uint32_t(total - 1);; --mask) {
        uint32_t rest = full & ~mask;
        uint8_t up = 0;
        while (rest && !up) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint32_t super = mask | (1u << v);
            up |= uint8_t(sat[super] | any_sup[super]);
        }
        any_sup[mask] = up;
        if (sat[mask] && !up) out.push_back(mask);
        if (mask == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

MaskGraph checked_mask_graph(const Graph& g, const Predicate& p) {
    int limit = p.hereditary() ? kHereditaryLimit : kNonHereditaryLimit;
    if (g.n() > limit)
        throw std::invalid_argument("oracle size limit exceeded: n=" + std::to_string(g.n()) +
                                    " > " + std::to_string(limit) + " for " + p.name());
    return MaskGraph::from_graph(g);
}

}  // namespace

std::vector<Bitset> masks_to_bitsets(const std::vector<uint32_t>& masks, int n) {
    std::vector<Bitset> out;
    out.reserve(masks.size());
    for (uint32_t m : masks) {
        Bitset b(n);
        uint32_t rest = m;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            b.set(v);
        }
        out.push_back(std::move(b));
    }
    return out;
}

void sort_canonical(std::vector<Bitset>& sets) {
    std::sort(sets.begin(), sets.end(), Bitset::set_less);
}

std::vector<Bitset> enumerate_maximal_bruteforce(const Graph& g, const Predicate& p) {
    MaskGraph mg = checked_mask_graph(g, p);
    std::vector<Bitset> out = masks_to_bitsets(maximal_masks(mg, p), g.n());
    sort_canonical(out);
    return out;
}

long long count_maximal(const Graph& g, const Predicate& p) {
    MaskGraph mg = checked_mask_graph(g, p);
    return (long long)maximal_masks(mg, p).size();
}

bool is_maximal(const Graph& g, const Bitset& s, const Predicate& p) {
    if (!eval_predicate(g, p, s))
        throw std::invalid_argument("is_maximal: predicate fails on the set itself");
    if (p.hereditary()) {
        Bitset outside = g.all_vertices() - s;
        bool extendable = false;
        outside.for_each([&](int v) {
            if (extendable) return;
            Bitset t = s;
            t.set(v);
            if (eval_predicate(g, p, t)) extendable = true;
        });
        return !extendable;
    }
    // Non-hereditary: check supersets of every size.
    MaskGraph mg = checked_mask_graph(g, p);
    uint32_t base = 0;
    s.for_each([&](int v) { base |= 1u << v; });
    uint32_t full = mg.full_mask();
    uint32_t freebits = full & ~base;
    // Iterate all non-empty subsets of the free vertices.
    for (uint32_t sub = freebits; sub; sub = (sub - 1) & freebits) {
        if (eval_predicate(mg, p, base | sub)) return false;
    }
    return true;
}

}  // namespace cg
