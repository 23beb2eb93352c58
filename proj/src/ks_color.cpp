#include "contextlab/ks_color.hpp"

namespace contextlab {

namespace {

// Assignment values.
constexpr int kUnset = -1;
constexpr int kRed = 0;
constexpr int kGreen = 1;

struct KsSearch {
    const Graph& g;
    std::vector<uint64_t> cliques;
    std::vector<int> value;
    std::vector<std::vector<int>> cliques_of;  // clique indices touching vertex

    KsSearch(const Graph& g, const std::vector<uint64_t>& cliques)
        : g(g), cliques(cliques), value(static_cast<size_t>(g.n()), kUnset),
          cliques_of(static_cast<size_t>(g.n())) {
        for (size_t c = 0; c < cliques.size(); ++c)
            for (int v : mask_to_vertices(cliques[c])) cliques_of[static_cast<size_t>(v)].push_back(static_cast<int>(c));
    }

    // Sets v and propagates; records every vertex it sets into `trail`.
    bool assign(int v, int val, std::vector<int>& trail) {
        if (value[static_cast<size_t>(v)] != kUnset) return value[static_cast<size_t>(v)] == val;
        value[static_cast<size_t>(v)] = val;
        trail.push_back(v);
        if (val == kGreen) {
            for (uint64_t m = g.neighbors(v); m;) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                if (!assign(u, kRed, trail)) return false;
            }
        }
        for (int c : cliques_of[static_cast<size_t>(v)])
            if (!check_clique(c, trail)) return false;
        return true;
    }

    // A clique with all members red is dead; one with a single undecided
    // member and no green forces that member green.
    bool check_clique(int c, std::vector<int>& trail) {
        int unknown = -1, unknown_count = 0;
        for (int v : mask_to_vertices(cliques[static_cast<size_t>(c)])) {
            if (value[static_cast<size_t>(v)] == kGreen) return true;
            if (value[static_cast<size_t>(v)] == kUnset) {
                unknown = v;
                ++unknown_count;
                if (unknown_count > 1) return true;
            }
        }
        if (unknown_count == 0) return false;
        return assign(unknown, kGreen, trail);
    }

    void undo(std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            value[static_cast<size_t>(trail.back())] = kUnset;
            trail.pop_back();
        }
    }

    int pick() const {
        int best = -1, best_score = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (value[static_cast<size_t>(v)] != kUnset) continue;
            int score = 0;
            for (int c : cliques_of[static_cast<size_t>(v)]) {
                bool live = true;
                for (int u : mask_to_vertices(cliques[static_cast<size_t>(c)]))
                    if (value[static_cast<size_t>(u)] == kGreen) {
                        live = false;
                        break;
                    }
                score += live ? 1 : 0;
            }
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        return best;
    }

    bool run(std::vector<int>& trail) {
        int v = pick();
        if (v < 0) return true;
        for (int val : {kGreen, kRed}) {
            size_t mark = trail.size();
            if (assign(v, val, trail) && run(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<bool>> ks_colorable(const Graph& g, int d) {
    if (d < 1) throw error("dimension must be positive");
    auto cliques = cliques_of_size(g, d);
    KsSearch search(g, cliques);
    std::vector<int> trail;
    // Seed propagation: cliques that are already units.
    for (size_t c = 0; c < cliques.size(); ++c)
        if (!search.check_clique(static_cast<int>(c), trail)) return std::nullopt;
    if (!search.run(trail)) return std::nullopt;
    std::vector<bool> green(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) green[static_cast<size_t>(v)] = search.value[static_cast<size_t>(v)] == kGreen;
    return green;
}

bool verify_ks_coloring(const Graph& g, int d, const std::vector<bool>& green) {
    if (static_cast<int>(green.size()) != g.n()) return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) && green[static_cast<size_t>(u)] && green[static_cast<size_t>(v)])
                return false;
    for (uint64_t clique : cliques_of_size(g, d)) {
        int greens = 0;
        for (int v : mask_to_vertices(clique)) greens += green[static_cast<size_t>(v)] ? 1 : 0;
        if (greens != 1) return false;
    }
    return true;
}

}  // namespace contextlab
