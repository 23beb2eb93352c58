#include "contextlab/bell.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <set>

#include "contextlab/quantum.hpp"

namespace contextlab {

BellExpression build_bell_expression(const GameSpec& spec) {
    BellExpression e;
    e.spec = spec;
    int nb = spec.basis_count();
    int n = spec.d;
    std::set<std::array<int, 5>> seen1;
    std::set<std::array<int, 4>> seen2;

    for (int b = 0; b < nb; ++b) {
        for (int b2 = 0; b2 < nb; ++b2) {
            if (b2 == b) continue;
            for (int v : spec.bases[b]) {
                if (spec.slot_in_basis(b2, v) < 0) continue;
                // ordered basis pair (b, b2) sharing ray v
                for (int p = 0; p < n; ++p) {
                    for (int q = 0; q < n; ++q) {
                        if (q == p) continue;
                        ++e.raw_term_count;
                        std::array<int, 2> first{p, b};
                        std::array<int, 2> second{q, b2};
                        if (second < first) std::swap(first, second);
                        std::array<int, 5> key{first[0], first[1], second[0], second[1], v};
                        if (seen1.insert(key).second) {
                            BellTerm t;
                            t.type = 1;
                            t.p = first[0];
                            t.q = second[0];
                            t.basis_p = first[1];
                            t.basis_rest = second[1];
                            t.shared = v;
                            e.terms.push_back(t);
                        }
                    }
                }
                for (int p = 0; p < n; ++p) {
                    ++e.raw_term_count;
                    std::array<int, 4> key{p, b2, b, v};
                    if (seen2.insert(key).second) {
                        BellTerm t;
                        t.type = 2;
                        t.p = p;
                        t.basis_p = b2;
                        t.basis_rest = b;
                        t.shared = v;
                        e.terms.push_back(t);
                    }
                }
            }
        }
    }
    return e;
}

namespace {

double term_prob_qm(const GameSpec& spec, const std::vector<Observable>& all_obs,
                    const StateVector& psi, const BellTerm& t) {
    int n = spec.d;
    std::vector<Observable> obs;
    obs.reserve(n);
    for (int p = 0; p < n; ++p) {
        int b = t.basis_rest;
        if (p == t.p) b = t.basis_p;
        if (t.type == 1 && p != t.p && p != t.q) b = t.basis_p;  // marginalized anyway
        obs.push_back(all_obs[b]);
    }

    if (t.type == 1) {
        JointOutcome out;
        out.labels.assign(n, "");
        out.labels[t.p] = spec.labels[t.shared];
        out.labels[t.q] = spec.labels[t.shared];
        return joint_probability(psi, obs, out);
    }

    std::vector<int> rest;
    for (int idx : spec.bases[t.basis_rest])
        if (idx != t.shared) rest.push_back(idx);
    std::vector<int> others;
    for (int p = 0; p < n; ++p)
        if (p != t.p) others.push_back(p);

    double total = 0.0;
    std::sort(rest.begin(), rest.end());
    do {
        for (int w : spec.bases[t.basis_p]) {
            if (w == t.shared) continue;
            JointOutcome out;
            out.labels.assign(n, "");
            for (std::size_t k = 0; k < others.size(); ++k)
                out.labels[others[k]] = spec.labels[rest[k]];
            out.labels[t.p] = spec.labels[w];
            total += joint_probability(psi, obs, out);
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return total;
}

bool term_violated_classical(const GameSpec& spec, const BellTerm& t,
                             const ClassicalStrategy& s) {
    if (t.type == 1)
        return s.answer[t.p][t.basis_p] == t.shared &&
               s.answer[t.q][t.basis_rest] == t.shared;
    if (s.answer[t.p][t.basis_p] == t.shared) return false;
    std::vector<int> got;
    for (int p = 0; p < spec.d; ++p) {
        if (p == t.p) continue;
        int a = s.answer[p][t.basis_rest];
        if (a == t.shared) return false;
        got.push_back(a);
    }
    std::sort(got.begin(), got.end());
    return std::adjacent_find(got.begin(), got.end()) == got.end();
}

}  // namespace

double term_probability_quantum(const BellExpression& expr, const BellTerm& t) {
    return term_prob_qm(expr.spec, basis_observables(expr.spec), supersinglet(expr.spec.d), t);
}

double term_probability_classical(const BellExpression& expr, const BellTerm& t,
                                  const ClassicalStrategy& s) {
    validate_strategy(expr.spec, s);
    return term_violated_classical(expr.spec, t, s) ? 1.0 : 0.0;
}

double evaluate_bell_quantum(const BellExpression& expr) {
    if (expr.terms.empty()) return 0.0;
    std::vector<Observable> all_obs = basis_observables(expr.spec);
    StateVector psi = supersinglet(expr.spec.d);
    double total = 0.0;
    for (const BellTerm& t : expr.terms)
        total += 1.0 - term_prob_qm(expr.spec, all_obs, psi, t);
    return total;
}

long long classical_score(const BellExpression& expr, const ClassicalStrategy& s) {
    validate_strategy(expr.spec, s);
    long long total = 0;
    for (const BellTerm& t : expr.terms)
        if (!term_violated_classical(expr.spec, t, s)) ++total;
    return total;
}

double evaluate_bell_classical(const BellExpression& expr, const ClassicalStrategy& s) {
    return static_cast<double>(classical_score(expr, s));
}

LhvMaxReport lhv_attains_max(const GameSpec& spec) {
    LhvMaxReport r;
    r.certificate = chromatic_number(base_graph(spec));
    r.attains = r.certificate.chi <= spec.d;
    return r;
}

namespace {

// Depth-first maximization of the number of satisfied terms over all
// deterministic strategies. Variables are (party, basis) pairs in party-major
// order; each term is scored once its last variable is assigned.
struct BoundSearch {
    const BellExpression& expr;
    int n, nb, nvars;
    long long total_terms;
    std::vector<std::vector<int>> by_last;  // var -> indexes of terms closing there
    std::vector<int> ans;                   // var -> registry ray index (-1 unset)
    long long violations = 0;

    long long best = -1;
    std::vector<int> best_ans;
    long long nodes = 0;
    long long budget = 0;
    bool cut = false;
    bool found_optimum = false;
    long long frontier_upper = -1;

    explicit BoundSearch(const BellExpression& e)
        : expr(e),
          n(e.spec.d),
          nb(e.spec.basis_count()),
          nvars(n * nb),
          total_terms(static_cast<long long>(e.terms.size())),
          by_last(static_cast<std::size_t>(nvars)),
          ans(static_cast<std::size_t>(nvars), -1) {
        for (std::size_t ti = 0; ti < e.terms.size(); ++ti) {
            const BellTerm& t = e.terms[ti];
            int last = t.p * nb + t.basis_p;
            if (t.type == 1) {
                last = std::max(last, t.q * nb + t.basis_rest);
            } else {
                for (int p = 0; p < n; ++p)
                    if (p != t.p) last = std::max(last, p * nb + t.basis_rest);
            }
            by_last[static_cast<std::size_t>(last)].push_back(static_cast<int>(ti));
        }
    }

    bool violated(const BellTerm& t) const {
        if (t.type == 1)
            return ans[static_cast<std::size_t>(t.p * nb + t.basis_p)] == t.shared &&
                   ans[static_cast<std::size_t>(t.q * nb + t.basis_rest)] == t.shared;
        if (ans[static_cast<std::size_t>(t.p * nb + t.basis_p)] == t.shared) return false;
        int seen_mask_small[5];
        int cnt = 0;
        for (int p = 0; p < n; ++p) {
            if (p == t.p) continue;
            int a = ans[static_cast<std::size_t>(p * nb + t.basis_rest)];
            if (a == t.shared) return false;
            for (int k = 0; k < cnt; ++k)
                if (seen_mask_small[k] == a) return false;
            seen_mask_small[cnt++] = a;
        }
        return true;
    }

    void dfs(int var) {
        if (found_optimum || cut) return;
        if (var == nvars) {
            long long value = total_terms - violations;
            if (value > best) {
                best = value;
                best_ans = ans;
                if (best == total_terms) found_optimum = true;
            }
            return;
        }
        int b = var % nb;
        for (int slot = 0; slot < n; ++slot) {
            if (found_optimum) return;
            if (nodes >= budget) {
                cut = true;
                frontier_upper = std::max(frontier_upper, total_terms - violations);
                return;
            }
            ++nodes;
            ans[static_cast<std::size_t>(var)] = expr.spec.bases[b][slot];
            long long added = 0;
            for (int ti : by_last[static_cast<std::size_t>(var)])
                if (violated(expr.terms[static_cast<std::size_t>(ti)])) ++added;
            violations += added;
            if (total_terms - violations > best) dfs(var + 1);
            violations -= added;
            ans[static_cast<std::size_t>(var)] = -1;
        }
    }
};

}  // namespace

LhvBound lhv_bound_exact(const BellExpression& expr, long long limit) {
    if (limit < 1) throw error("lhv_bound_exact needs a positive limit");
    const GameSpec& spec = expr.spec;
    int nvars = spec.d * spec.basis_count();

    // Strategy space size d^nvars, saturating at limit+1.
    long long space = 1;
    for (int i = 0; i < nvars; ++i) {
        if (space > limit / spec.d + 1) {
            space = limit + 1;
            break;
        }
        space *= spec.d;
    }
    bool feasible = space <= limit;

    BoundSearch search(expr);
    search.budget = feasible ? LLONG_MAX : limit;

    // Seed with the all-first-member strategy so bounds are defined even
    // when the budget is tiny.
    ClassicalStrategy seed;
    seed.answer.assign(spec.d, std::vector<int>(spec.basis_count()));
    for (int p = 0; p < spec.d; ++p)
        for (int b = 0; b < spec.basis_count(); ++b) seed.answer[p][b] = spec.bases[b][0];
    search.best = classical_score(expr, seed);
    search.best_ans.assign(static_cast<std::size_t>(nvars), 0);
    for (int p = 0; p < spec.d; ++p)
        for (int b = 0; b < spec.basis_count(); ++b)
            search.best_ans[static_cast<std::size_t>(p * spec.basis_count() + b)] =
                spec.bases[b][0];
    if (search.best == search.total_terms) search.found_optimum = true;

    if (!search.found_optimum) search.dfs(0);

    LhvBound out;
    out.nodes = search.nodes;
    out.lower = search.best;
    out.completed = search.found_optimum || !search.cut;
    out.upper = out.completed ? search.best
                              : std::max(search.best, search.frontier_upper);
    if (out.completed) out.exact = search.best;
    out.best.answer.assign(spec.d, std::vector<int>(spec.basis_count()));
    for (int p = 0; p < spec.d; ++p)
        for (int b = 0; b < spec.basis_count(); ++b)
            out.best.answer[p][b] =
                search.best_ans[static_cast<std::size_t>(p * spec.basis_count() + b)];
    return out;
}

BoundReport bell_bounds(const BellExpression& expr, long long limit) {
    BoundReport r;
    r.d = expr.spec.d;
    r.omega_qm = expr.omega_qm();
    r.raw_terms = expr.raw_term_count;
    r.qm_value = evaluate_bell_quantum(expr);
    LhvMaxReport m = lhv_attains_max(expr.spec);
    r.lhv_attains_max = m.attains;
    r.chi_c = m.certificate.chi;
    LhvBound b = lhv_bound_exact(expr, limit);
    r.lhv_lower = b.lower;
    r.lhv_upper = b.upper;
    if (b.exact) {
        r.lhv_bound = b.exact;
        r.method = "exhaustive";
    } else {
        r.method = m.attains ? "branch-and-bound-partial" : "coloring-certificate";
    }
    return r;
}

}  // namespace contextlab
