#include "contextlab/graph.hpp"

#include <algorithm>

namespace contextlab {

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

Graph Graph::with_added_vertex(uint64_t nbrs) const {
    if (n_ >= 64) throw error("graph size out of range (0..64)");
    if (nbrs & ~all_mask()) throw error("neighbor mask out of range");
    Graph g(n_ + 1);
    g.adj_ = adj_;
    g.adj_.push_back(nbrs);
    uint64_t bit = 1ull << n_;
    while (nbrs) {
        int v = __builtin_ctzll(nbrs);
        nbrs &= nbrs - 1;
        g.adj_[static_cast<size_t>(v)] |= bit;
    }
    return g;
}

Graph Graph::induced(uint64_t keep) const {
    std::vector<int> verts = mask_to_vertices(keep & all_mask());
    Graph g(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw error("permutation size mismatch");
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) g.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.all_mask();
}

bool is_square_free(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (__builtin_popcountll(g.neighbors(u) & g.neighbors(v)) >= 2) return false;
    return true;
}

namespace {

void bron_kerbosch(const Graph& g, uint64_t r, uint64_t p, uint64_t x,
                   std::vector<uint64_t>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of P|X covering most of P.
    int pivot = -1, best = -1;
    for (uint64_t m = p | x; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        int cover = __builtin_popcountll(p & g.neighbors(v));
        if (cover > best) {
            best = cover;
            pivot = v;
        }
    }
    uint64_t cand = p & ~g.neighbors(pivot);
    while (cand) {
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        uint64_t bit = 1ull << v;
        bron_kerbosch(g, r | bit, p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit;
        x |= bit;
    }
}

void extend_clique(const Graph& g, uint64_t cur, uint64_t cand, int remaining,
                   std::vector<uint64_t>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    while (cand) {
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        if (__builtin_popcountll(cand) + 1 < remaining) return;
        extend_clique(g, cur | (1ull << v), cand & g.neighbors(v), remaining - 1, out);
    }
}

}  // namespace

std::vector<uint64_t> max_cliques(const Graph& g) {
    std::vector<uint64_t> out;
    if (g.n() == 0) return out;
    bron_kerbosch(g, 0, g.all_mask(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> cliques_of_size(const Graph& g, int k) {
    std::vector<uint64_t> out;
    if (k < 1 || k > g.n()) return out;
    extend_clique(g, 0, g.all_mask(), k, out);
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t k_core(const Graph& g, int k) {
    uint64_t alive = g.all_mask();
    bool changed = true;
    while (changed) {
        changed = false;
        for (uint64_t m = alive; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            if (__builtin_popcountll(g.neighbors(v) & alive) < k) {
                alive &= ~(1ull << v);
                changed = true;
            }
        }
    }
    return alive;
}

std::vector<int> mask_to_vertices(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

std::string to_graph6(const Graph& g) {
    if (g.n() > 62) throw error("graph6 supports at most 62 vertices");
    std::string s;
    s.push_back(static_cast<char>(g.n() + 63));
    int bitpos = 0, acc = 0;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bitpos == 6) {
                s.push_back(static_cast<char>(acc + 63));
                bitpos = 0;
                acc = 0;
            }
        }
    if (bitpos) s.push_back(static_cast<char>((acc << (6 - bitpos)) + 63));
    return s;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw error("empty graph6 string");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw error("bad graph6 vertex count");
    Graph g(n);
    size_t pos = 1;
    int bitpos = 6, acc = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bitpos == 6) {
                if (pos >= s.size()) throw error("truncated graph6 string");
                acc = s[pos++] - 63;
                if (acc < 0 || acc > 63) throw error("bad graph6 character");
                bitpos = 0;
            }
            if ((acc >> (5 - bitpos)) & 1) g.add_edge(u, v);
            ++bitpos;
        }
    return g;
}

Graph build_orthogonality_graph(const ModalRaySet& rays, double tol) {
    return std::visit([tol](const auto& rs) { return build_orthogonality_graph(rs, tol); }, rays);
}

}  // namespace contextlab
