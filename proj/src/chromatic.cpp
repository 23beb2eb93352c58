#include "contextlab/chromatic.hpp"

#include <algorithm>

namespace contextlab {

namespace {

struct ColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;          // -1 = uncolored
    std::vector<uint64_t> used_at;   // per vertex, bitmask of colors on neighbors

    explicit ColorSearch(const Graph& g, int k)
        : g(g), k(k), color(static_cast<size_t>(g.n()), -1),
          used_at(static_cast<size_t>(g.n()), 0) {}

    // Most saturated vertex; ties by degree, then lowest index.
    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (color[static_cast<size_t>(v)] >= 0) continue;
            int sat = __builtin_popcountll(used_at[static_cast<size_t>(v)]);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool run(int colored, int max_used) {
        if (colored == g.n()) return true;
        int v = pick();
        uint64_t used = used_at[static_cast<size_t>(v)];
        // Trying more than one fresh color only permutes color names.
        int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if ((used >> c) & 1) continue;
            color[static_cast<size_t>(v)] = c;
            for (uint64_t m = g.neighbors(v); m;) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                used_at[static_cast<size_t>(u)] |= 1ull << c;
            }
            if (run(colored + 1, std::max(max_used, c + 1))) return true;
            color[static_cast<size_t>(v)] = -1;
            for (uint64_t m = g.neighbors(v); m;) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                uint64_t other = 0;
                for (uint64_t m2 = g.neighbors(u); m2;) {
                    int w = __builtin_ctzll(m2);
                    m2 &= m2 - 1;
                    if (color[static_cast<size_t>(w)] >= 0)
                        other |= 1ull << color[static_cast<size_t>(w)];
                }
                used_at[static_cast<size_t>(u)] = other;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> color_within(const Graph& g, int k) {
    if (k < 0) throw error("negative color count");
    if (g.n() == 0) return std::vector<int>{};
    if (k == 0) return std::nullopt;
    if (k > 64) k = 64;  // n <= 64, so 64 colors always suffice
    ColorSearch s(g, k);
    if (!s.run(0, 0)) return std::nullopt;
    return s.color;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int k) {
    if (static_cast<int>(colors.size()) != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (colors[static_cast<size_t>(v)] < 0 || colors[static_cast<size_t>(v)] >= k)
            return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) &&
                colors[static_cast<size_t>(u)] == colors[static_cast<size_t>(v)])
                return false;
    return true;
}

uint64_t greedy_clique(const Graph& g) {
    uint64_t best = 0;
    int best_size = 0;
    for (int seed = 0; seed < g.n(); ++seed) {
        uint64_t clique = 1ull << seed;
        uint64_t cand = g.neighbors(seed);
        while (cand) {
            // Extend by the candidate keeping the most candidates alive.
            int pick = -1, pick_cover = -1;
            for (uint64_t m = cand; m;) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                int cover = __builtin_popcountll(cand & g.neighbors(v));
                if (cover > pick_cover) {
                    pick_cover = cover;
                    pick = v;
                }
            }
            clique |= 1ull << pick;
            cand &= g.neighbors(pick);
        }
        int size = __builtin_popcountll(clique);
        if (size > best_size) {
            best_size = size;
            best = clique;
        }
    }
    return best;
}

ChromaticCertificate chromatic_number(const Graph& g) {
    ChromaticCertificate cert;
    if (g.n() == 0) {
        cert.coloring = {};
        return cert;
    }
    uint64_t clique = greedy_clique(g);
    int lower = __builtin_popcountll(clique);
    for (int k = std::max(lower, 1);; ++k) {
        auto coloring = color_within(g, k);
        if (coloring) {
            cert.chi = k;
            cert.coloring = *coloring;
            cert.clique = clique;
            cert.clique_tight = (lower == k);
            cert.exhausted_below = (k > lower);
            return cert;
        }
    }
}

}  // namespace contextlab
