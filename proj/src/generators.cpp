#include "cg/generators.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace cg {

Graph gen_complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph gen_complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    for (int s : part_sizes) {
        if (s <= 0) throw std::invalid_argument("gen_complete_multipartite: part sizes must be positive");
        n += s;
    }
    std::vector<int> part_of(size_t(n));
    int idx = 0, pid = 0;
    for (int s : part_sizes) {
        for (int i = 0; i < s; ++i) part_of[size_t(idx++)] = pid;
        ++pid;
    }
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[size_t(u)] != part_of[size_t(v)]) b.add_edge(u, v);
    return b.build();
}

Graph gen_complete_bipartite(int a, int b) { return gen_complete_multipartite({a, b}); }

Graph gen_path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: need at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph gen_edgeless(int n) { return Graph(n); }

Graph gen_moon_moser(int N) {
    if (N <= 0 || N % 3 != 0) throw std::invalid_argument("gen_moon_moser: N must be a positive multiple of 3");
    return gen_complete_multipartite(std::vector<int>(size_t(N / 3), 3));
}

Graph gen_k5_union(int N) {
    if (N <= 0 || N % 5 != 0) throw std::invalid_argument("gen_k5_union: N must be a positive multiple of 5");
    GraphBuilder b(N);
    for (int base = 0; base < N; base += 5)
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) b.add_edge(base + i, base + j);
    return b.build();
}

Example1Graph gen_example1(int l, int n) {
    if (l <= 0 || n <= 0) throw std::invalid_argument("gen_example1: parameters must be positive");
    int c = l * (l + 1) / 2 + 1;
    int k = c - 1;
    GraphBuilder b(k + n);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) b.add_edge(u, v);
    for (int u = 0; u < k; ++u)
        for (int i = 0; i < n; ++i) b.add_edge(u, k + i);
    return Example1Graph{b.build(), c, k};
}

Graph gen_random(int n, double p, uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("gen_random: bad parameters");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) b.add_edge(u, v);
    return b.build();
}

Graph gen_random_tree(int n, uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("gen_random_tree: need at least 1 vertex");
    GraphBuilder b(n);
    if (n == 1) return b.build();
    if (n == 2) {
        b.add_edge(0, 1);
        return b.build();
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(size_t(n - 2));
    for (int& x : pruefer) x = pick(rng);
    std::vector<int> deg(size_t(n), 1);
    for (int x : pruefer) ++deg[size_t(x)];
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[size_t(v)] == 1) leaves.push_back(v);
    std::sort(leaves.begin(), leaves.end(), std::greater<int>());
    for (int x : pruefer) {
        int leaf = leaves.back();
        leaves.pop_back();
        b.add_edge(leaf, x);
        if (--deg[size_t(x)] == 1) {
            leaves.push_back(x);
            std::sort(leaves.begin(), leaves.end(), std::greater<int>());
        }
    }
    b.add_edge(leaves[0], leaves[1]);
    return b.build();
}

Graph gen_random_degenerate(int n, int d, uint64_t seed) {
    if (n <= 0 || d < 0) throw std::invalid_argument("gen_random_degenerate: bad parameters");
    std::mt19937_64 rng(seed);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) {
        int cap = std::min(v, d);
        if (cap == 0) continue;
        std::uniform_int_distribution<int> howmany(0, cap);
        int k = howmany(rng);
        std::vector<int> earlier(size_t(v));
        std::iota(earlier.begin(), earlier.end(), 0);
        std::shuffle(earlier.begin(), earlier.end(), rng);
        for (int i = 0; i < k; ++i) b.add_edge(v, earlier[size_t(i)]);
    }
    return b.build();
}

}  // namespace cg
