#pragma once

#include <array>
#include <string>
#include <vector>

#include "contextlab/rational.hpp"

namespace contextlab {

/// One highlighted evaluation of the obstruction algebra at exact
/// parameters (tangent half-angle values t1,t2,t3).
struct RefutationSample {
    Rational t1, t2, t3;
    bool gh_matches_stated_form = false;
    bool ef_matches_stated_form = false;
    bool candidates_not_proportional = false;
    bool key_identity_holds = false;
};

/// Outcome of the exact dimension-3 impossibility argument for the
/// ten-vertex obstruction graph. All checks are exact rational arithmetic;
/// the grid is large enough per variable to certify the polynomial
/// identities, not merely sample them.
struct RefutationReport {
    std::string status;               // "refuted" when every stage passes
    int grid_points_checked = 0;
    bool stated_forms_all_match = false;   // derived v_GH, v_EF equal the known closed forms
    bool key_identity_certified = false;   // vanishing cross components force s2^2 = -s3^2
    bool cross_positive_on_grid = false;   // candidates never proportional at generic parameters
    bool degenerate_cases_pinned = false;  // every zero parameter collapses two fixed rays
    std::vector<std::string> degenerate_notes;
    std::vector<RefutationSample> highlighted;
};

/// Reproduces the algebra mechanically: fix the three mutually orthogonal
/// rays as the standard basis, parameterize the one-letter-shared rays by
/// exact cosine/sine pairs, derive the doubly-constrained rays by cross
/// products, and certify that the two derivations of the final ray can
/// only agree when s2^2 = -s3^2 — which over the reals pins two distinct
/// rays together. Real-ray scope; complex evidence is numerical only.
RefutationReport refute_obstruction();

}  // namespace contextlab
