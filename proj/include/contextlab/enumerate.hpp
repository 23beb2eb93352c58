#pragma once

#include <functional>
#include <vector>

#include "contextlab/graph.hpp"

namespace contextlab {

/// Streaming enumeration task over isomorphism classes of square-free
/// graphs with at most n_max vertices. The square-free constraint is built
/// into the generation; connectivity and the extra filter apply only to
/// what gets emitted, not to the search tree (disconnected intermediates
/// are needed to reach every class).
struct GenTask {
    int n_max = 1;  // hard cap 14
    bool connected_only = true;
    std::function<bool(const Graph&)> filter;  // optional extra emission predicate
    std::function<void(const Graph&)> emit;    // required sink
    int threads = 1;                           // <=0 means hardware concurrency
    bool assert_unique = false;  // re-check streamed canonical forms are distinct
};

/// Emits every isomorphism class exactly once via canonical augmentation:
/// grow by one vertex at a time, keep only square-free extensions, accept a
/// child iff the new vertex is automorphic to the vertex in the last
/// canonical position (the designated deletion point). Emission order is
/// deterministic for a fixed n_max regardless of thread count.
void enumerate_connected_square_free(const GenTask& task);

/// Isomorphism-class counts per vertex count 1..n_max of connected
/// square-free graphs.
std::vector<long long> count_connected_square_free(int n_max, int threads = 1);

/// All connected square-free isomorphism classes with <= n_max vertices
/// and chromatic number > d, in deterministic order. Cheap filters (d-core,
/// greedy coloring) run before the exact coloring search.
std::vector<Graph> find_sic_candidates(int n_max, int d, int threads = 1);

}  // namespace contextlab
