#pragma once

#include <optional>
#include <vector>

#include "contextlab/graph.hpp"

namespace contextlab {

/// Searches for a green/red vertex assignment where no two adjacent
/// vertices are both green and every d-clique contains exactly one green
/// vertex. Returns the green-flag vector if such an assignment exists.
/// Backtracking with unit propagation over the d-cliques; deterministic.
std::optional<std::vector<bool>> ks_colorable(const Graph& g, int d);

/// Direct rule-by-rule check of an assignment, independent of the search.
bool verify_ks_coloring(const Graph& g, int d, const std::vector<bool>& green);

}  // namespace contextlab
