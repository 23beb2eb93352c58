#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contextlab/chromatic.hpp"
#include "contextlab/graph.hpp"
#include "contextlab/quantum.hpp"
#include "contextlab/ray.hpp"

namespace contextlab {

/// A d-player cooperative game built from a ray set C in C^d.  The ray
/// registry holds C first (indexes 0..c_size-1) followed by the completion
/// rays C' that were needed to extend maximal orthogonal subsets of C to full
/// bases.  Questions are basis indexes; answers are registry ray indexes.
struct GameSpec {
    int d = 3;
    ModalRaySet rays;                     // registry: C then C'
    int c_size = 0;                       // |C|
    std::vector<std::string> labels;      // per registry ray, "r<i>"
    std::vector<std::vector<int>> bases;  // each has exactly d registry indexes, sorted
    int chi_c = 0;                        // chromatic number of the graph on C
    bool chi_warning = false;             // true when chi_c <= d (no quantum advantage expected)
    bool canonical_completion_used = false;  // d > 3 completions depend on a basis convention

    int num_players() const { return d; }
    int basis_count() const { return static_cast<int>(bases.size()); }
    int registry_size() const { return modal_size(rays); }
    bool in_c(int ray_idx) const { return ray_idx >= 0 && ray_idx < c_size; }
    /// Position of ray_idx inside basis b, or -1 when absent.
    int slot_in_basis(int b, int ray_idx) const;
};

/// Orthogonality graph of the C prefix only.
Graph base_graph(const GameSpec& spec, double tol = kFloatTol);
/// Orthogonality graph of the whole registry (C together with C').
Graph union_graph(const GameSpec& spec, double tol = kFloatTol);

/// One projective measurement per basis; outcome labels name registry rays.
std::vector<Observable> basis_observables(const GameSpec& spec);
int ray_index_of_label(const GameSpec& spec, const std::string& label);

/// Build the game: bases are the maximal orthogonal subsets of C of size >= 2,
/// completed to full orthonormal bases.  Completion rays are deduplicated and
/// appended to the registry.  Throws when some subset exceeds size d.
GameSpec build_game(const ExactRaySet& c, int d);
GameSpec build_game(const FloatRaySet& c, int d, double tol = kFloatTol);
GameSpec build_game(const ModalRaySet& c, int d);

struct RefereeVerdict {
    bool win = true;
    int rule = 0;  // 1 or 2 when lost, naming the violated loss rule below
};

/// Decide one round.  question[p] is the basis index asked of party p,
/// answers[p] the registry index of the ray party p reported (must belong to
/// the asked basis).  Loss rules:
///   (i)  two parties whose bases share a vector both answer that vector
///        (two parties asked the same basis must answer distinct vectors);
///   (ii) d-1 parties asked one basis b answer distinct vectors, leaving one
///        vector v of b unclaimed, and the remaining party, asked a basis
///        containing v, does not answer v.
RefereeVerdict referee_check(const GameSpec& spec,
                             const std::vector<int>& question,
                             const std::vector<int>& answers);

/// Deterministic strategy: answer[p][b] is the registry ray index party p
/// reports when asked basis b.
struct ClassicalStrategy {
    std::vector<std::vector<int>> answer;  // [party][basis]
};

void validate_strategy(const GameSpec& spec, const ClassicalStrategy& s);

struct GameStats {
    long long rounds = 0;
    long long wins = 0;
    long long losses = 0;
    long long rule_i_losses = 0;
    long long rule_ii_losses = 0;
};

/// Play `rounds` rounds with uniformly random questions.  The quantum
/// strategy shares a fresh d-party supersinglet each round and each party
/// measures its asked basis; outcome labels identify registry rays.
GameStats simulate_game_quantum(const GameSpec& spec, long long rounds, std::uint64_t seed);
GameStats simulate_game_classical(const GameSpec& spec, const ClassicalStrategy& s,
                                  long long rounds, std::uint64_t seed);

/// Sum of joint probabilities of all losing answer tuples for one question
/// when playing the shared-supersinglet strategy.
double losing_mass(const GameSpec& spec, const std::vector<int>& question);

struct ScanResult {
    bool all_win = false;
    long long questions = 0;
    long long losses = 0;
    std::vector<int> first_losing_question;  // empty when all_win
    int first_rule = 0;
};

/// Evaluate a deterministic strategy on every question tuple.
ScanResult exhaustive_scan(const GameSpec& spec, const ClassicalStrategy& s);

/// Strategy induced by a proper d-coloring of the registry orthogonality
/// graph: party p answers the unique member of the asked basis with color p.
ClassicalStrategy strategy_from_coloring(const GameSpec& spec, const std::vector<int>& coloring);

struct StrategySearchResult {
    ClassicalStrategy best;
    long long best_wins = 0;   // out of `questions`
    long long questions = 0;
};

/// Random restarts plus greedy single-entry improvement, scored by the number
/// of winning questions under exhaustive_scan.  Deterministic for fixed seed.
StrategySearchResult search_classical_strategy(const GameSpec& spec, int samples,
                                               std::uint64_t seed);

}  // namespace contextlab
