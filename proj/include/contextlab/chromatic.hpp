#pragma once

#include <optional>
#include <vector>

#include "contextlab/graph.hpp"

namespace contextlab {

/// Proper k-coloring if one exists (colors 0..k-1, indexed by vertex).
/// DSATUR-ordered backtracking; deterministic.
std::optional<std::vector<int>> color_within(const Graph& g, int k);

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int k);

/// A clique found greedily from highest-degree seeds; lower-bounds chi.
uint64_t greedy_clique(const Graph& g);

struct ChromaticCertificate {
    int chi = 0;
    std::vector<int> coloring;       // proper chi-coloring
    uint64_t clique = 0;             // clique witnessing the lower bound, if tight
    bool clique_tight = false;       // true iff |clique| == chi
    // When the clique bound is not tight the lower bound rests on the failed
    // exhaustive (chi-1)-coloring search; this flag records that.
    bool exhausted_below = false;
};

ChromaticCertificate chromatic_number(const Graph& g);

}  // namespace contextlab
