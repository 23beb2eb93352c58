#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is written against plain adjacency matrices on purpose:
// the oracles must not share code with the structures they validate.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

struct DenseGraph {
    int n = 0;
    bool adj[16][16] = {};
};

inline bool dense_connected(const DenseGraph& g) {
    if (g.n == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++visited;
        for (int u = 0; u < g.n; ++u)
            if (g.adj[v][u] && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                stack.push_back(u);
            }
    }
    return visited == g.n;
}

// No C4 as a subgraph: no two distinct vertices with two common neighbors.
inline bool dense_square_free(const DenseGraph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            int common = 0;
            for (int c = 0; c < g.n; ++c)
                if (g.adj[a][c] && g.adj[b][c]) ++common;
            if (common >= 2) return false;
        }
    return true;
}

/// Labeled connected square-free graph counts for n = 1..n_max (n_max <= 7):
/// every edge subset of K_n is visited explicitly.
inline std::vector<long long> labeled_connected_square_free_counts(int n_max) {
    std::vector<long long> counts;
    for (int n = 1; n <= n_max; ++n) {
        int bits = n * (n - 1) / 2;
        long long count = 0;
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            DenseGraph g;
            g.n = n;
            int bit = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b, ++bit)
                    if (mask >> bit & 1) g.adj[a][b] = g.adj[b][a] = true;
            if (dense_connected(g) && dense_square_free(g)) ++count;
        }
        counts.push_back(count);
    }
    return counts;
}

/// |Aut(g)| by checking every vertex permutation. adj must be symmetric.
inline long long automorphism_count(const DenseGraph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    long long autos = 0;
    do {
        bool ok = true;
        for (int a = 0; a < g.n && ok; ++a)
            for (int b = a + 1; b < g.n && ok; ++b)
                if (g.adj[a][b] !=
                    g.adj[perm[static_cast<std::size_t>(a)]][perm[static_cast<std::size_t>(b)]])
                    ok = false;
        if (ok) ++autos;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

inline long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace oracle
