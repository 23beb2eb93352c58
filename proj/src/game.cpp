#include "contextlab/game.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "contextlab/quantum.hpp"
#include "contextlab/rng.hpp"

namespace contextlab {

namespace {

template <class S>
GameSpec build_game_impl(const RaySet<S>& c, int d, double tol) {
    if (d < 2 || d > 5) throw error("build_game: supported dimensions are 2..5");
    if (c.dim != d) throw error("build_game: ray dimension must equal d");
    if (c.size() < 2) throw error("build_game: need at least two rays");

    Graph gc = build_orthogonality_graph(c, tol);

    std::vector<Ray<S>> registry = c.rays;
    auto find_or_add = [&](const Ray<S>& r) {
        for (std::size_t i = 0; i < registry.size(); ++i)
            if (registry[i] == r) return static_cast<int>(i);
        registry.push_back(r);
        return static_cast<int>(registry.size()) - 1;
    };

    GameSpec spec;
    spec.d = d;
    spec.c_size = c.size();

    for (uint64_t mask : max_cliques(gc)) {
        std::vector<int> verts = mask_to_vertices(mask);
        if (static_cast<int>(verts.size()) < 2) continue;
        if (static_cast<int>(verts.size()) > d)
            throw error("build_game: found more than d mutually orthogonal rays");
        std::vector<int> basis = verts;
        if (static_cast<int>(verts.size()) < d) {
            if (d == 3) {
                basis.push_back(find_or_add(
                    complete_pair_d3(c.rays[verts[0]], c.rays[verts[1]], tol)));
            } else {
                std::vector<Ray<S>> partial;
                for (int v : verts) partial.push_back(c.rays[v]);
                auto completion = complete_to_basis(partial, d, tol);
                for (const Ray<S>& w : completion.added) basis.push_back(find_or_add(w));
                spec.canonical_completion_used = true;
            }
        }
        std::sort(basis.begin(), basis.end());
        spec.bases.push_back(std::move(basis));
    }
    std::sort(spec.bases.begin(), spec.bases.end());
    spec.bases.erase(std::unique(spec.bases.begin(), spec.bases.end()), spec.bases.end());
    if (spec.bases.empty()) throw error("build_game: no orthogonal pair in the ray set");

    // Completion rays added after position c_size-1 form C'; a completion can
    // never coincide with a member of C, else that subset was not maximal.
    std::vector<KVec<S>> vecs;
    std::vector<std::string> labels;
    vecs.reserve(registry.size());
    for (std::size_t i = 0; i < registry.size(); ++i) {
        vecs.push_back(registry[i].vec());
        labels.push_back("r" + std::to_string(i));
    }
    spec.rays = ModalRaySet(RaySet<S>::from_vectors(vecs, labels));
    spec.labels = std::move(labels);

    ChromaticCertificate cert = chromatic_number(gc);
    spec.chi_c = cert.chi;
    spec.chi_warning = cert.chi <= d;
    return spec;
}

void tally_verdict(GameStats& st, const RefereeVerdict& v) {
    ++st.rounds;
    if (v.win) {
        ++st.wins;
        return;
    }
    ++st.losses;
    if (v.rule == 1) ++st.rule_i_losses;
    if (v.rule == 2) ++st.rule_ii_losses;
}

}  // namespace

int ray_index_of_label(const GameSpec& spec, const std::string& label) {
    for (std::size_t i = 0; i < spec.labels.size(); ++i)
        if (spec.labels[i] == label) return static_cast<int>(i);
    throw error("unknown outcome label: " + label);
}

std::vector<Observable> basis_observables(const GameSpec& spec) {
    FloatRaySet flt = to_float_rays(spec.rays);
    std::vector<Observable> out;
    out.reserve(spec.bases.size());
    for (const std::vector<int>& basis : spec.bases) {
        std::vector<FloatRay> members;
        std::vector<std::string> labels;
        for (int idx : basis) {
            members.push_back(flt.rays[idx]);
            labels.push_back(spec.labels[idx]);
        }
        out.push_back(Observable::with_labels(
            OrthoBasis<FloatScalar>::checked(spec.d, members), labels));
    }
    return out;
}

namespace {

void validate_question(const GameSpec& spec, const std::vector<int>& question) {
    if (static_cast<int>(question.size()) != spec.d)
        throw error("need one basis index per party");
    for (int b : question)
        if (b < 0 || b >= spec.basis_count()) throw error("basis index out of range");
}

// Walk every answer tuple consistent with `question`, calling f(answers).
template <class F>
void for_each_answer_tuple(const GameSpec& spec, const std::vector<int>& question, F&& f) {
    int n = spec.d;
    std::vector<int> slot(n, 0);
    std::vector<int> answers(n);
    for (;;) {
        for (int p = 0; p < n; ++p) answers[p] = spec.bases[question[p]][slot[p]];
        f(answers);
        int p = n - 1;
        while (p >= 0 && slot[p] == spec.d - 1) slot[p--] = 0;
        if (p < 0) break;
        ++slot[p];
    }
}

}  // namespace

int GameSpec::slot_in_basis(int b, int ray_idx) const {
    const std::vector<int>& members = bases.at(static_cast<std::size_t>(b));
    for (std::size_t k = 0; k < members.size(); ++k)
        if (members[k] == ray_idx) return static_cast<int>(k);
    return -1;
}

Graph base_graph(const GameSpec& spec, double tol) {
    Graph g = build_orthogonality_graph(spec.rays, tol);
    uint64_t keep = (spec.c_size >= 64) ? ~0ull : ((1ull << spec.c_size) - 1);
    return g.induced(keep);
}

Graph union_graph(const GameSpec& spec, double tol) {
    return build_orthogonality_graph(spec.rays, tol);
}

GameSpec build_game(const ExactRaySet& c, int d) { return build_game_impl(c, d, kFloatTol); }

GameSpec build_game(const FloatRaySet& c, int d, double tol) {
    return build_game_impl(c, d, tol);
}

GameSpec build_game(const ModalRaySet& c, int d) {
    return std::visit([&](const auto& rs) { return build_game_impl(rs, d, kFloatTol); }, c);
}

RefereeVerdict referee_check(const GameSpec& spec, const std::vector<int>& question,
                             const std::vector<int>& answers) {
    int n = spec.d;
    validate_question(spec, question);
    if (static_cast<int>(answers.size()) != n) throw error("need one answer per party");
    for (int p = 0; p < n; ++p)
        if (spec.slot_in_basis(question[p], answers[p]) < 0)
            throw error("answer is not a member of the asked basis");

    // Rule (i): equal answers imply both asked bases contain that vector, so
    // any duplicated answer is a loss; this covers the same-basis case.
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (answers[p] == answers[q]) return {false, 1};

    // Rule (ii): when the other d-1 parties all hold one basis b, their
    // (necessarily distinct) answers leave exactly one vector of b unclaimed;
    // a party asked a basis containing that vector must answer it.
    for (int p = 0; p < n; ++p) {
        int b = -1;
        bool same = true;
        for (int q = 0; q < n && same; ++q) {
            if (q == p) continue;
            if (b < 0)
                b = question[q];
            else if (question[q] != b)
                same = false;
        }
        if (!same || b < 0) continue;
        int leftover = -1;
        for (int idx : spec.bases[b]) {
            bool claimed = false;
            for (int q = 0; q < n; ++q)
                if (q != p && answers[q] == idx) claimed = true;
            if (!claimed) {
                if (leftover >= 0) {
                    leftover = -2;
                    break;
                }
                leftover = idx;
            }
        }
        if (leftover < 0) continue;
        if (spec.slot_in_basis(question[p], leftover) >= 0 && answers[p] != leftover)
            return {false, 2};
    }
    return {true, 0};
}

void validate_strategy(const GameSpec& spec, const ClassicalStrategy& s) {
    if (static_cast<int>(s.answer.size()) != spec.d)
        throw error("strategy needs one answer table per party");
    for (const std::vector<int>& table : s.answer) {
        if (static_cast<int>(table.size()) != spec.basis_count())
            throw error("strategy table needs one entry per basis");
        for (int b = 0; b < spec.basis_count(); ++b)
            if (spec.slot_in_basis(b, table[b]) < 0)
                throw error("strategy answer is not a member of its basis");
    }
}

GameStats simulate_game_quantum(const GameSpec& spec, long long rounds, std::uint64_t seed) {
    StateVector psi = supersinglet(spec.d);
    std::vector<Observable> all_obs = basis_observables(spec);
    std::mt19937_64 qrng = make_rng(fork_seed(seed, "questions"));
    std::uniform_int_distribution<int> pick(0, spec.basis_count() - 1);

    GameStats st;
    std::vector<int> question(spec.d);
    std::vector<int> answers(spec.d);
    std::vector<Observable> obs;
    for (long long r = 0; r < rounds; ++r) {
        for (int p = 0; p < spec.d; ++p) question[p] = pick(qrng);
        obs.clear();
        for (int p = 0; p < spec.d; ++p) obs.push_back(all_obs[question[p]]);
        JointOutcome out = sample_joint(psi, obs, fork_seed(seed, static_cast<uint64_t>(r)));
        for (int p = 0; p < spec.d; ++p) answers[p] = ray_index_of_label(spec, out.labels[p]);
        tally_verdict(st, referee_check(spec, question, answers));
    }
    return st;
}

GameStats simulate_game_classical(const GameSpec& spec, const ClassicalStrategy& s,
                                  long long rounds, std::uint64_t seed) {
    validate_strategy(spec, s);
    std::mt19937_64 qrng = make_rng(fork_seed(seed, "questions"));
    std::uniform_int_distribution<int> pick(0, spec.basis_count() - 1);

    GameStats st;
    std::vector<int> question(spec.d);
    std::vector<int> answers(spec.d);
    for (long long r = 0; r < rounds; ++r) {
        for (int p = 0; p < spec.d; ++p) question[p] = pick(qrng);
        for (int p = 0; p < spec.d; ++p) answers[p] = s.answer[p][question[p]];
        tally_verdict(st, referee_check(spec, question, answers));
    }
    return st;
}

double losing_mass(const GameSpec& spec, const std::vector<int>& question) {
    validate_question(spec, question);
    StateVector psi = supersinglet(spec.d);
    std::vector<Observable> all_obs = basis_observables(spec);
    std::vector<Observable> obs;
    for (int p = 0; p < spec.d; ++p) obs.push_back(all_obs[question[p]]);

    double mass = 0.0;
    for_each_answer_tuple(spec, question, [&](const std::vector<int>& answers) {
        if (referee_check(spec, question, answers).win) return;
        JointOutcome out;
        for (int a : answers) out.labels.push_back(spec.labels[a]);
        mass += joint_probability(psi, obs, out);
    });
    return mass;
}

ScanResult exhaustive_scan(const GameSpec& spec, const ClassicalStrategy& s) {
    validate_strategy(spec, s);
    int n = spec.d;
    int nb = spec.basis_count();
    ScanResult res;
    std::vector<int> question(n, 0);
    std::vector<int> answers(n);
    for (;;) {
        for (int p = 0; p < n; ++p) answers[p] = s.answer[p][question[p]];
        RefereeVerdict v = referee_check(spec, question, answers);
        ++res.questions;
        if (!v.win) {
            ++res.losses;
            if (res.first_losing_question.empty()) {
                res.first_losing_question = question;
                res.first_rule = v.rule;
            }
        }
        int p = n - 1;
        while (p >= 0 && question[p] == nb - 1) question[p--] = 0;
        if (p < 0) break;
        ++question[p];
    }
    res.all_win = (res.losses == 0);
    return res;
}

ClassicalStrategy strategy_from_coloring(const GameSpec& spec,
                                         const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != spec.registry_size())
        throw error("coloring must cover every registry ray");
    Graph g = union_graph(spec);
    for (int u = 0; u < g.n(); ++u) {
        if (coloring[u] < 0 || coloring[u] >= spec.d) throw error("coloring uses a bad color");
        for (int v : mask_to_vertices(g.neighbors(u)))
            if (v > u && coloring[u] == coloring[v])
                throw error("coloring is not proper on the orthogonality graph");
    }
    ClassicalStrategy s;
    s.answer.assign(spec.d, std::vector<int>(spec.basis_count(), -1));
    for (int b = 0; b < spec.basis_count(); ++b)
        for (int idx : spec.bases[b]) s.answer[coloring[idx]][b] = idx;
    for (const std::vector<int>& table : s.answer)
        for (int a : table)
            if (a < 0) throw error("coloring does not hit every color in some basis");
    return s;
}

StrategySearchResult search_classical_strategy(const GameSpec& spec, int samples,
                                               std::uint64_t seed) {
    int n = spec.d;
    int nb = spec.basis_count();
    std::mt19937_64 rng = make_rng(fork_seed(seed, "strategy-search"));
    std::uniform_int_distribution<int> slot(0, n - 1);

    auto wins = [&](const ClassicalStrategy& s) {
        ScanResult r = exhaustive_scan(spec, s);
        return r.questions - r.losses;
    };

    StrategySearchResult res;
    res.best_wins = -1;
    for (int t = 0; t < samples; ++t) {
        ClassicalStrategy s;
        s.answer.assign(n, std::vector<int>(nb));
        for (int p = 0; p < n; ++p)
            for (int b = 0; b < nb; ++b) s.answer[p][b] = spec.bases[b][slot(rng)];
        long long w = wins(s);
        if (w > res.best_wins) {
            res.best_wins = w;
            res.best = s;
        }
    }

    // Greedy single-entry improvement of the best random draw.
    bool improved = true;
    while (improved) {
        improved = false;
        for (int p = 0; p < n; ++p) {
            for (int b = 0; b < nb; ++b) {
                int keep = res.best.answer[p][b];
                for (int cand : spec.bases[b]) {
                    if (cand == keep) continue;
                    res.best.answer[p][b] = cand;
                    long long w = wins(res.best);
                    if (w > res.best_wins) {
                        res.best_wins = w;
                        keep = cand;
                        improved = true;
                    } else {
                        res.best.answer[p][b] = keep;
                    }
                }
                res.best.answer[p][b] = keep;
            }
        }
    }
    res.questions = exhaustive_scan(spec, res.best).questions;
    return res;
}

}  // namespace contextlab
