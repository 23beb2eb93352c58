#pragma once

#include "contextlab/graph.hpp"

namespace contextlab {

/// True iff h is isomorphic to a (not necessarily induced) subgraph of g:
/// an injective vertex map carrying every edge of h to an edge of g.
/// Backtracking over a connectivity-first vertex order with degree pruning.
bool subgraph_contains(const Graph& g, const Graph& h);

}  // namespace contextlab
