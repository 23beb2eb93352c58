#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "contextlab/fixtures.hpp"
#include "contextlab/game.hpp"

using namespace contextlab;

namespace {

ExactVec ev3(long a, long b, long c) {
    ExactVec v(3);
    v[0] = RationalComplex(a);
    v[1] = RationalComplex(b);
    v[2] = RationalComplex(c);
    return v;
}

ExactRaySet axes_set() {
    return ExactRaySet::from_vectors({ev3(1, 0, 0), ev3(0, 1, 0), ev3(0, 0, 1)});
}

ExactRaySet bowtie_set() {
    return ExactRaySet::from_vectors(
        {ev3(1, 0, 0), ev3(0, 1, 0), ev3(0, 0, 1), ev3(0, 1, 1), ev3(0, 1, -1)});
}

GameSpec s3_game() { return build_game(thirteen_vector_set(), 3); }

// Registry index of an exact ray, or -1.
int idx_of(const GameSpec& spec, const ExactVec& v) {
    const ExactRaySet& rs = std::get<ExactRaySet>(spec.rays);
    ExactRay target = ExactRay::canonical(v);
    for (int i = 0; i < rs.size(); ++i)
        if (ray_equal(rs.rays[static_cast<std::size_t>(i)], target)) return i;
    return -1;
}

// Basis index whose member set is exactly `rays`, or -1.
int basis_with(const GameSpec& spec, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    for (int b = 0; b < spec.basis_count(); ++b)
        if (spec.bases[static_cast<std::size_t>(b)] == members) return b;
    return -1;
}

}  // namespace

TEST_CASE("game built from the 13-ray set: register and bases") {
    GameSpec spec = s3_game();
    CHECK(spec.d == 3);
    CHECK(spec.c_size == 13);
    CHECK(spec.registry_size() == 25);  // twelve completion rays
    CHECK(spec.basis_count() == 16);    // four triangles + twelve completed pairs
    CHECK(spec.chi_c == 4);
    CHECK_FALSE(spec.chi_warning);
    CHECK_FALSE(spec.canonical_completion_used);  // dimension-3 pair completion is unique
    CHECK(spec.num_players() == 3);

    for (const std::vector<int>& b : spec.bases) {
        CHECK(b.size() == 3);
        CHECK(std::is_sorted(b.begin(), b.end()));
    }
    // Labels name registry positions.
    CHECK(spec.labels.size() == 25);
    CHECK(spec.labels[0] == "r0");
    CHECK(spec.labels[24] == "r24");
}

TEST_CASE("the four all-original triads appear as bases") {
    GameSpec spec = s3_game();
    std::vector<std::vector<ExactVec>> triads{
        {ev3(1, 0, 0), ev3(0, 1, 0), ev3(0, 0, 1)},
        {ev3(1, 0, 0), ev3(0, 1, 1), ev3(0, 1, -1)},
        {ev3(0, 1, 0), ev3(1, 0, 1), ev3(1, 0, -1)},
        {ev3(0, 0, 1), ev3(1, 1, 0), ev3(1, -1, 0)},
    };
    int pure = 0;
    for (const auto& triad : triads) {
        std::vector<int> members;
        for (const ExactVec& v : triad) {
            int idx = idx_of(spec, v);
            REQUIRE(idx >= 0);
            CHECK(spec.in_c(idx));
            members.push_back(idx);
        }
        CHECK(basis_with(spec, members) >= 0);
        ++pure;
    }
    CHECK(pure == 4);
    // Every other basis mixes in exactly one completion ray.
    int completed = 0;
    for (const std::vector<int>& b : spec.bases) {
        int outside = 0;
        for (int idx : b)
            if (!spec.in_c(idx)) ++outside;
        if (outside == 1) ++completed;
        CHECK(outside <= 1);
    }
    CHECK(completed == 12);
}

TEST_CASE("a known completion ray lands in C-prime") {
    GameSpec spec = s3_game();
    // (0,1,1) and (1,1,-1) are orthogonal; the ray completing them is
    // spanned by (2,-1,1), which is not one of the thirteen.
    int u = idx_of(spec, ev3(0, 1, 1));
    int v = idx_of(spec, ev3(1, 1, -1));
    int w = idx_of(spec, ev3(2, -1, 1));
    REQUIRE(u >= 0);
    REQUIRE(v >= 0);
    REQUIRE(w >= 0);
    CHECK(spec.in_c(u));
    CHECK(spec.in_c(v));
    CHECK_FALSE(spec.in_c(w));
    int b = basis_with(spec, {u, v, w});
    CHECK(b >= 0);
    CHECK(spec.slot_in_basis(b, w) >= 0);
    CHECK(spec.slot_in_basis(b, 999) == -1);
}

TEST_CASE("every basis is exactly orthonormal as rays") {
    GameSpec spec = s3_game();
    const ExactRaySet& rs = std::get<ExactRaySet>(spec.rays);
    for (const std::vector<int>& b : spec.bases)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                const auto& u = rs.rays[static_cast<std::size_t>(b[i])].vec();
                const auto& v = rs.rays[static_cast<std::size_t>(b[j])].vec();
                CHECK(inner_product(u, v).is_zero());
            }
}

TEST_CASE("float-mode build agrees with the exact build") {
    GameSpec exact = s3_game();
    GameSpec flt = build_game(to_float_rays(thirteen_vector_set()), 3);
    CHECK(flt.basis_count() == exact.basis_count());
    CHECK(flt.registry_size() == exact.registry_size());
    CHECK(flt.c_size == exact.c_size);
    CHECK(flt.bases == exact.bases);
    CHECK(flt.chi_c == 4);
}

TEST_CASE("base and union orthogonality graphs") {
    GameSpec spec = s3_game();
    Graph gc = base_graph(spec);
    CHECK(gc.n() == 13);
    CHECK(gc.edge_count() == 24);
    Graph gu = union_graph(spec);
    CHECK(gu.n() == 25);
    // The union graph restricted to C is the base graph.
    for (int u = 0; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v) CHECK(gu.has_edge(u, v) == gc.has_edge(u, v));
}

TEST_CASE("referee: same basis to all parties needs pairwise distinct answers") {
    GameSpec spec = s3_game();
    int e1 = idx_of(spec, ev3(1, 0, 0)), e2 = idx_of(spec, ev3(0, 1, 0)),
        e3 = idx_of(spec, ev3(0, 0, 1));
    int b = basis_with(spec, {e1, e2, e3});
    REQUIRE(b >= 0);

    RefereeVerdict win = referee_check(spec, {b, b, b}, {e1, e2, e3});
    CHECK(win.win);
    RefereeVerdict lose = referee_check(spec, {b, b, b}, {e1, e1, e2});
    CHECK_FALSE(lose.win);
    CHECK(lose.rule == 1);
}

TEST_CASE("referee: two bases sharing a ray must not both get it") {
    GameSpec spec = s3_game();
    int e1 = idx_of(spec, ev3(1, 0, 0)), e2 = idx_of(spec, ev3(0, 1, 0)),
        e3 = idx_of(spec, ev3(0, 0, 1));
    int p = idx_of(spec, ev3(0, 1, 1)), m = idx_of(spec, ev3(0, 1, -1));
    int b0 = basis_with(spec, {e1, e2, e3});
    int b1 = basis_with(spec, {e1, p, m});
    REQUIRE(b0 >= 0);
    REQUIRE(b1 >= 0);

    RefereeVerdict lose = referee_check(spec, {b0, b1, b0}, {e1, e1, e3});
    CHECK_FALSE(lose.win);
    CHECK(lose.rule == 1);
    RefereeVerdict ok = referee_check(spec, {b0, b1, b0}, {e1, p, e3});
    // Party 1 dodged e1; parties 0 and 2 answered distinct members of b0,
    // leaving e2 unclaimed, and e2 is not in party 1's basis: clean win.
    CHECK(ok.win);
}

TEST_CASE("referee: leftover vector forces the singled-out party") {
    GameSpec spec = s3_game();
    int e1 = idx_of(spec, ev3(1, 0, 0)), e2 = idx_of(spec, ev3(0, 1, 0)),
        e3 = idx_of(spec, ev3(0, 0, 1));
    int p = idx_of(spec, ev3(0, 1, 1)), m = idx_of(spec, ev3(0, 1, -1));
    int b0 = basis_with(spec, {e1, e2, e3});
    int b1 = basis_with(spec, {e1, p, m});
    REQUIRE(b0 >= 0);
    REQUIRE(b1 >= 0);

    // Parties 1 and 2 claim e2 and e3 of basis b0; the leftover of b0 is e1,
    // which party 0's basis b1 contains. Party 0 must answer e1.
    RefereeVerdict win = referee_check(spec, {b1, b0, b0}, {e1, e2, e3});
    CHECK(win.win);
    RefereeVerdict lose = referee_check(spec, {b1, b0, b0}, {p, e2, e3});
    CHECK_FALSE(lose.win);
    CHECK(lose.rule == 2);
}

TEST_CASE("referee rejects malformed rounds") {
    GameSpec spec = s3_game();
    const std::vector<int>& b0 = spec.bases[0];
    CHECK_THROWS_AS(referee_check(spec, {0, 0}, {b0[0], b0[1]}), error);          // short question
    CHECK_THROWS_AS(referee_check(spec, {0, 0, 99}, {b0[0], b0[1], b0[2]}), error);  // bad basis
    CHECK_THROWS_AS(referee_check(spec, {0, 0, 0}, {b0[0], b0[1], 999}), error);  // bad answer
    // Answer not a member of the asked basis.
    int outside = 0;
    while (std::find(b0.begin(), b0.end(), outside) != b0.end()) ++outside;
    CHECK_THROWS_AS(referee_check(spec, {0, 0, 0}, {b0[0], b0[1], outside}), error);
}

TEST_CASE("quantum strategy never loses: sampled rounds") {
    GameSpec spec = s3_game();
    GameStats st = simulate_game_quantum(spec, 10000, 20250825);
    CHECK(st.rounds == 10000);
    CHECK(st.wins == 10000);
    CHECK(st.losses == 0);
    CHECK(st.rule_i_losses == 0);
    CHECK(st.rule_ii_losses == 0);
}

TEST_CASE("quantum strategy never loses: analytic mass on every question") {
    GameSpec spec = s3_game();
    double worst = 0.0;
    std::vector<int> q(3, 0);
    for (q[0] = 0; q[0] < spec.basis_count(); ++q[0])
        for (q[1] = 0; q[1] < spec.basis_count(); ++q[1])
            for (q[2] = 0; q[2] < spec.basis_count(); ++q[2])
                worst = std::max(worst, losing_mass(spec, q));
    CHECK(worst < 1e-10);
}

TEST_CASE("simulation is deterministic per seed") {
    GameSpec spec = s3_game();
    GameStats a = simulate_game_quantum(spec, 64, 7);
    GameStats b = simulate_game_quantum(spec, 64, 7);
    CHECK(a.wins == b.wins);
    CHECK(a.losses == b.losses);
}

TEST_CASE("coloring strategy wins the bowtie game everywhere") {
    GameSpec spec = build_game(bowtie_set(), 3);
    CHECK(spec.basis_count() == 2);
    CHECK(spec.registry_size() == 5);  // no completions needed
    CHECK(spec.chi_c == 3);
    CHECK(spec.chi_warning);  // three colors suffice, so classical play wins

    auto coloring = color_within(union_graph(spec), 3);
    REQUIRE(coloring.has_value());
    ClassicalStrategy s = strategy_from_coloring(spec, *coloring);
    validate_strategy(spec, s);

    ScanResult scan = exhaustive_scan(spec, s);
    CHECK(scan.all_win);
    CHECK(scan.questions == 8);  // 2 bases ^ 3 parties
    CHECK(scan.losses == 0);

    GameStats st = simulate_game_classical(spec, s, 500, 99);
    CHECK(st.losses == 0);
}

TEST_CASE("triangle game: single basis, no completions, classical win") {
    GameSpec spec = build_game(axes_set(), 3);
    CHECK(spec.basis_count() == 1);
    CHECK(spec.registry_size() == 3);
    CHECK(spec.chi_c == 3);

    auto coloring = color_within(union_graph(spec), 3);
    REQUIRE(coloring.has_value());
    ClassicalStrategy s = strategy_from_coloring(spec, *coloring);
    CHECK(exhaustive_scan(spec, s).all_win);
}

TEST_CASE("no classical strategy wins the 13-ray game everywhere") {
    GameSpec spec = s3_game();
    // The registry graph cannot be 3-colored (its C part already needs 4),
    // so no coloring strategy exists...
    CHECK_FALSE(color_within(union_graph(spec), 3).has_value());
    CHECK_THROWS_AS(strategy_from_coloring(spec, std::vector<int>(25, 0)), error);

    // ...and the best strategy from randomized search plus greedy
    // improvement still loses at least one question.
    StrategySearchResult found = search_classical_strategy(spec, 1000, 4242);
    CHECK(found.questions == 16 * 16 * 16);
    CHECK(found.best_wins < found.questions);
    ScanResult scan = exhaustive_scan(spec, found.best);
    CHECK_FALSE(scan.all_win);
    CHECK(scan.losses == found.questions - found.best_wins);
    CHECK_FALSE(scan.first_losing_question.empty());
    // The recorded failure reproduces under a direct referee call.
    std::vector<int> q = scan.first_losing_question;
    std::vector<int> answers;
    for (int party = 0; party < 3; ++party)
        answers.push_back(found.best.answer[static_cast<std::size_t>(party)]
                                           [static_cast<std::size_t>(q[static_cast<std::size_t>(
                                               party)])]);
    RefereeVerdict verdict = referee_check(spec, q, answers);
    CHECK_FALSE(verdict.win);
    CHECK(verdict.rule == scan.first_rule);
}

TEST_CASE("strategy validation catches shape and membership errors") {
    GameSpec spec = build_game(bowtie_set(), 3);
    ClassicalStrategy bad;
    bad.answer = {{0, 0}, {0, 0}};  // one party short
    CHECK_THROWS_AS(validate_strategy(spec, bad), error);
    ClassicalStrategy outside;
    outside.answer = {{4, 0}, {0, 0}, {0, 0}};  // ray 4 is not in basis 0
    bool first_entry_invalid = std::find(spec.bases[0].begin(), spec.bases[0].end(), 4) ==
                               spec.bases[0].end();
    if (first_entry_invalid) CHECK_THROWS_AS(validate_strategy(spec, outside), error);
}

TEST_CASE("four-dimensional padded game uses canonical completion") {
    GameSpec spec = build_game(ModalRaySet(thirteen_vector_set_extended(1)), 4);
    CHECK(spec.d == 4);
    CHECK(spec.c_size == 14);
    CHECK(spec.chi_c == 5);
    CHECK_FALSE(spec.chi_warning);
    CHECK(spec.canonical_completion_used);
    CHECK(spec.basis_count() == 16);  // same maximal structure, lifted by e4
    for (const std::vector<int>& b : spec.bases) CHECK(b.size() == 4);
}

TEST_CASE("build_game rejects unusable input") {
    CHECK_THROWS_AS(build_game(thirteen_vector_set(), 4), error);  // dimension mismatch
    ExactRaySet lonely = ExactRaySet::from_vectors({ev3(1, 2, 3)});
    CHECK_THROWS_AS(build_game(lonely, 3), error);  // no orthogonal pair anywhere
}
