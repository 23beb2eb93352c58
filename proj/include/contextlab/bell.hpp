#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contextlab/chromatic.hpp"
#include "contextlab/game.hpp"

namespace contextlab {

/// One zero-probability constraint of the Bell expression derived from a
/// game spec.  Type 1: parties p and q, asked two distinct bases sharing the
/// ray `shared`, both answer it.  Type 2: every party except p is asked
/// `basis_rest` and answers a distinct member other than `shared`, while p,
/// asked `basis_p` (which also contains `shared`), answers something else.
struct BellTerm {
    int type = 1;         // 1 or 2, mirroring the game's loss rules (i)/(ii)
    int p = -1;           // first constrained party
    int q = -1;           // second constrained party (type 1 only, else -1)
    int basis_p = -1;     // basis asked of p
    int basis_rest = -1;  // type 1: q's basis; type 2: basis of every other party
    int shared = -1;      // registry index of the ray shared by the two bases
};

struct BellExpression {
    GameSpec spec;
    std::vector<BellTerm> terms;  // deduplicated, deterministic order
    long long raw_term_count = 0;

    int omega_qm() const { return static_cast<int>(terms.size()); }
};

/// Enumerate, over every ordered pair of distinct bases sharing a ray, a
/// type-1 term per ordered party pair and a type-2 term per party, then
/// deduplicate terms that state the same constraint.
BellExpression build_bell_expression(const GameSpec& spec);

/// Probability of the term's forbidden event under the shared supersinglet.
double term_probability_quantum(const BellExpression& expr, const BellTerm& t);
/// Same under a deterministic strategy (always 0 or 1).
double term_probability_classical(const BellExpression& expr, const BellTerm& t,
                                  const ClassicalStrategy& s);

/// Sum over terms of (1 - P) under the respective strategy.
double evaluate_bell_quantum(const BellExpression& expr);
double evaluate_bell_classical(const BellExpression& expr, const ClassicalStrategy& s);
/// Integer version of evaluate_bell_classical (every term contributes 0/1).
long long classical_score(const BellExpression& expr, const ClassicalStrategy& s);

/// A deterministic strategy reaches the algebraic maximum iff the
/// orthogonality graph of C admits a proper d-coloring; the certificate
/// carries either the coloring or the chromatic gap.
struct LhvMaxReport {
    bool attains = false;
    ChromaticCertificate certificate;
};
LhvMaxReport lhv_attains_max(const GameSpec& spec);

/// Exact deterministic maximum of the expression when the strategy space
/// fits the evaluation limit, otherwise bounds from a budgeted
/// branch-and-bound pass.
struct LhvBound {
    std::optional<long long> exact;
    long long lower = 0;  // value of the best strategy found
    long long upper = 0;  // proven upper bound on the deterministic maximum
    long long nodes = 0;
    bool completed = false;
    ClassicalStrategy best;
};
LhvBound lhv_bound_exact(const BellExpression& expr, long long limit = 100000000);

struct BoundReport {
    int d = 0;
    int omega_qm = 0;
    long long raw_terms = 0;
    double qm_value = 0.0;
    bool lhv_attains_max = false;
    int chi_c = 0;
    std::optional<long long> lhv_bound;
    long long lhv_lower = 0;
    long long lhv_upper = 0;
    std::string method;  // exhaustive | coloring-certificate | branch-and-bound-partial
};
BoundReport bell_bounds(const BellExpression& expr, long long limit = 100000000);

}  // namespace contextlab
