#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contextlab/graph.hpp"
#include "contextlab/ray.hpp"

namespace contextlab {

/// The ten-ray graph at the core of the dimension-3 impossibility argument:
/// vertices carry two-letter labels, edges join labels sharing a letter
/// (10 vertices, 16 edges, square-free).
Graph ten_vertex_obstruction();
const std::vector<std::string>& ten_vertex_obstruction_labels();

/// Faithful-representation search instance: find unit vectors in C^d, one
/// per vertex, orthogonal exactly on edges, bounded away from orthogonal on
/// non-edges, pairwise distinct as rays.
struct RepProblem {
    Graph graph;
    int d = 3;
    double tol_orth = 1e-7;  // max |<vi|vj>| on edges (unit vectors)
    double tol_sep = 1e-3;   // min |<vi|vj>| on non-edges, and min ray separation
};

enum class RepStatus { found, not_found_after_restarts };

struct RepResult {
    RepStatus status = RepStatus::not_found_after_restarts;
    std::optional<FloatRaySet> rays;  // set iff status == found
    double residual = 0.0;            // penalty of the winning restart, or best seen
    int restarts_used = 0;            // attempts consumed across real + complex phases
    bool used_complex = false;        // real-mode attempts sufficed unless set
};

/// Penalty-minimizing search: projected gradient descent with backtracking
/// line search from random unit starts, then orthogonality polish sweeps on
/// near-solutions. Real vectors are tried for all restarts before falling
/// back to complex ones. Seed-deterministic, including across thread
/// counts (the winner is the lowest succeeding restart index).
RepResult numeric_represent(const RepProblem& p, int restarts, uint64_t seed, int threads = 1);

/// Penalty of a candidate assignment (vectors need not be unit; they are
/// normalized first). Exposed for invariance checks.
double representation_penalty(const RepProblem& p, const std::vector<FloatVec>& vecs);

/// Both directions of faithfulness plus pairwise ray distinctness. Exact
/// mode ignores the tolerances in favor of exact zero/nonzero tests.
template <class S>
bool verify_representation(const RaySet<S>& rays, const Graph& g, double tol_orth = 1e-7,
                           double tol_sep = 1e-3) {
    if (rays.size() != g.n()) throw error("ray count does not match vertex count");
    for (int i = 0; i < rays.size(); ++i)
        for (int j = i + 1; j < rays.size(); ++j) {
            const auto& u = rays.rays[static_cast<size_t>(i)];
            const auto& v = rays.rays[static_cast<size_t>(j)];
            S ip = inner_product(u.vec(), v.vec());
            if constexpr (scalar_ops<S>::exact) {
                if (g.has_edge(i, j) != scalar_ops<S>::is_zero(ip)) return false;
                if (ray_equal(u, v)) return false;
            } else {
                double nu = std::sqrt(std::abs(inner_product(u.vec(), u.vec())));
                double nv = std::sqrt(std::abs(inner_product(v.vec(), v.vec())));
                double a = std::abs(ip) / (nu * nv);
                if (g.has_edge(i, j)) {
                    if (a > tol_orth) return false;
                } else {
                    if (a < tol_sep) return false;
                }
                if (1.0 - a < tol_sep) return false;  // same ray up to phase
            }
        }
    return true;
}

}  // namespace contextlab
