#pragma once

#include <cstdint>
#include <vector>

#include "contextlab/graph.hpp"

namespace contextlab {

/// Canonical adjacency encoding: the lexicographically maximal relabeled
/// adjacency matrix over all labelings admissible for the (optionally
/// colored) graph, plus vertex colors in canonical order. Two graphs have
/// equal forms iff they are isomorphic (respecting colors).
struct CanonicalForm {
    int n = 0;
    std::vector<uint64_t> rows;
    std::vector<int> colors;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    bool operator<(const CanonicalForm& o) const;
    uint64_t hash() const;
};

struct CanonicalResult {
    CanonicalForm form;
    std::vector<int> labeling;  // original vertex -> canonical position
    // Orbit ids from automorphisms discovered during the search. Equal ids
    // certify equivalence; distinct ids are only a fast-path miss — use
    // vertex_in_orbit_of for a definitive answer.
    std::vector<int> orbit;
};

CanonicalResult canonical_form(const Graph& g);
CanonicalResult canonical_form(const Graph& g, const std::vector<int>& vertex_colors);

/// True iff some automorphism of g maps u to v. Decided by comparing the
/// canonical forms of g with u marked and with v marked; independent of the
/// orbit fast path above.
bool vertex_in_orbit_of(const Graph& g, int u, int v);

/// Equitable refinement of the unit partition: cells in the structural
/// order the canonical search uses, i.e. canonical positions fill cells
/// front to back. Automorphism orbits never cross cells.
std::vector<std::vector<int>> refined_partition(const Graph& g);

}  // namespace contextlab
