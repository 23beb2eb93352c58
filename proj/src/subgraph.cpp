#include "contextlab/subgraph.hpp"

#include <algorithm>

namespace contextlab {

namespace {

// Pattern vertices ordered so each (after the first) touches as many
// already-placed vertices as possible; keeps the match tree narrow.
std::vector<int> match_order(const Graph& h) {
    std::vector<int> order;
    std::vector<bool> placed(static_cast<size_t>(h.n()), false);
    for (int step = 0; step < h.n(); ++step) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < h.n(); ++v) {
            if (placed[static_cast<size_t>(v)]) continue;
            int back = 0;
            for (int u : order) back += h.has_edge(v, u) ? 1 : 0;
            int deg = h.degree(v);
            if (back > best_back || (back == best_back && deg > best_deg)) {
                best = v;
                best_back = back;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[static_cast<size_t>(best)] = true;
    }
    return order;
}

bool match(const Graph& g, const Graph& h, const std::vector<int>& order, size_t step,
           std::vector<int>& image, uint64_t used) {
    if (step == order.size()) return true;
    int hv = order[step];
    for (int gv = 0; gv < g.n(); ++gv) {
        if ((used >> gv) & 1) continue;
        if (g.degree(gv) < h.degree(hv)) continue;
        bool ok = true;
        for (size_t j = 0; j < step; ++j)
            if (h.has_edge(hv, order[j]) && !g.has_edge(gv, image[static_cast<size_t>(order[j])])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        image[static_cast<size_t>(hv)] = gv;
        if (match(g, h, order, step + 1, image, used | (1ull << gv))) return true;
    }
    return false;
}

}  // namespace

bool subgraph_contains(const Graph& g, const Graph& h) {
    if (h.n() > g.n() || h.edge_count() > g.edge_count()) return false;
    if (h.n() == 0) return true;
    std::vector<int> order = match_order(h);
    std::vector<int> image(static_cast<size_t>(h.n()), -1);
    return match(g, h, order, 0, image, 0);
}

}  // namespace contextlab
