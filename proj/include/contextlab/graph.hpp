#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contextlab/ray.hpp"

namespace contextlab {

/// Undirected simple graph on up to 64 vertices, one adjacency word per
/// vertex. Values are cheap to copy; all analyses are pure functions.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(check_size(n)), adj_(static_cast<size_t>(n), 0) {}

    int n() const { return n_; }
    void add_edge(int u, int v) {
        if (u == v) throw error("self loop");
        adj_[static_cast<size_t>(u)] |= 1ull << v;
        adj_[static_cast<size_t>(v)] |= 1ull << u;
    }
    bool has_edge(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1; }
    uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return __builtin_popcountll(adj_[static_cast<size_t>(v)]); }
    int edge_count() const;
    uint64_t all_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

    /// Copy with one extra vertex adjacent to `nbrs` (bitmask over 0..n-1).
    Graph with_added_vertex(uint64_t nbrs) const;
    Graph induced(uint64_t keep) const;
    Graph relabeled(const std::vector<int>& perm) const;  // vertex v -> perm[v]

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    static int check_size(int n) {
        if (n < 0 || n > 64) throw error("graph size out of range (0..64)");
        return n;
    }
    int n_ = 0;
    std::vector<uint64_t> adj_;
};

bool is_connected(const Graph& g);

/// True iff g contains no 4-cycle as a subgraph, i.e. no two distinct
/// vertices share two or more common neighbors. Chords are irrelevant: a
/// chorded 4-cycle still contains the 4-cycle, so K4 and the diamond are
/// not square-free under this convention.
bool is_square_free(const Graph& g);

/// All maximal cliques (pivoting Bron-Kerbosch), as bitmasks in
/// deterministic order.
std::vector<uint64_t> max_cliques(const Graph& g);

/// All cliques of size exactly k, as bitmasks.
std::vector<uint64_t> cliques_of_size(const Graph& g, int k);

/// Iteratively strips vertices of degree < k; returns the surviving mask.
uint64_t k_core(const Graph& g, int k);

std::vector<int> mask_to_vertices(uint64_t mask);

// Standard graph6 encoding (ASCII, <= 62 vertices).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

/// Orthogonality graph of a ray set: vertices follow ray order, edges join
/// orthogonal rays.
template <class S>
Graph build_orthogonality_graph(const RaySet<S>& rays, double tol = kFloatTol) {
    if (rays.size() == 0) throw error("empty ray set");
    if (rays.size() > 64) throw error("ray set too large for graph (max 64)");
    Graph g(rays.size());
    for (int i = 0; i < rays.size(); ++i)
        for (int j = i + 1; j < rays.size(); ++j)
            if (is_orthogonal(rays.rays[static_cast<size_t>(i)], rays.rays[static_cast<size_t>(j)],
                              tol))
                g.add_edge(i, j);
    return g;
}

Graph build_orthogonality_graph(const ModalRaySet& rays, double tol = kFloatTol);

}  // namespace contextlab
