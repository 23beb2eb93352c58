#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "contextlab/bell.hpp"
#include "contextlab/enumerate.hpp"
#include "contextlab/fixtures.hpp"
#include "contextlab/ks_color.hpp"
#include "contextlab/manifest.hpp"
#include "contextlab/rays_io.hpp"
#include "contextlab/refute.hpp"
#include "contextlab/represent.hpp"
#include "contextlab/rng.hpp"
#include "contextlab/subgraph.hpp"

using nlohmann::json;
using namespace contextlab;

namespace {

struct Ctx {
    std::uint64_t seed = 12345;
    bool json_out = false;
    bool quiet = false;
    int threads = 0;  // 0: --threads unset, fall back to env / hardware
    std::string command;
    WallTimer timer;
    std::vector<std::pair<std::string, std::string>> input_hashes;
    std::vector<std::string> output_paths;
};

int resolve_threads(const Ctx& ctx) {
    if (ctx.threads > 0) return ctx.threads;
    if (const char* env = std::getenv("CONTEXTLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

json manifest_json(const Ctx& ctx) {
    json hashes = json::array();
    for (const auto& [path, hash] : ctx.input_hashes)
        hashes.push_back({{"path", path}, {"hash", hash}});
    return json{{"command", ctx.command},
                {"seed", ctx.seed},
                {"version", library_version()},
                {"threads", resolve_threads(ctx)},
                {"input_hashes", hashes},
                {"output_paths", ctx.output_paths},
                {"wall_time_s", ctx.timer.seconds()}};
}

void emit(const Ctx& ctx, json report, const std::string& human) {
    if (ctx.json_out) {
        report["manifest"] = manifest_json(ctx);
        std::cout << report.dump(2) << "\n";
    } else if (!human.empty()) {
        std::cout << human;
    }
}

void write_text_file(Ctx& ctx, const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw error("cannot write file: " + path);
    out << text;
    ctx.output_paths.push_back(path);
}

ExactRaySet make_axes_set() {
    std::vector<KVec<ExactScalar>> vecs;
    for (int k = 0; k < 3; ++k) vecs.push_back(standard_basis_vector<ExactScalar>(3, k));
    return ExactRaySet::from_vectors(vecs, {"e1", "e2", "e3"});
}

ExactRaySet make_bowtie_set() {
    std::vector<KVec<ExactScalar>> vecs;
    auto vec = [](int x, int y, int z) {
        KVec<ExactScalar> v(3);
        v[0] = RationalComplex(Rational(x), Rational(0));
        v[1] = RationalComplex(Rational(y), Rational(0));
        v[2] = RationalComplex(Rational(z), Rational(0));
        return v;
    };
    vecs.push_back(vec(1, 0, 0));
    vecs.push_back(vec(0, 1, 0));
    vecs.push_back(vec(0, 0, 1));
    vecs.push_back(vec(0, 1, 1));
    vecs.push_back(vec(0, 1, -1));
    return ExactRaySet::from_vectors(vecs);
}

ModalRaySet load_rays(Ctx& ctx, const std::string& path, const std::string& fixture) {
    if (!fixture.empty()) {
        if (!path.empty()) throw error("give either --rays or --fixture, not both");
        if (fixture == "v13") return ModalRaySet(thirteen_vector_set());
        if (fixture == "v13+1") return ModalRaySet(thirteen_vector_set_extended(1));
        if (fixture == "v13+2") return ModalRaySet(thirteen_vector_set_extended(2));
        if (fixture == "axes") return ModalRaySet(make_axes_set());
        if (fixture == "bowtie") return ModalRaySet(make_bowtie_set());
        throw error("unknown fixture '" + fixture + "' (v13, v13+1, v13+2, axes, bowtie)");
    }
    if (path.empty()) throw error("need --rays FILE or --fixture NAME");
    ctx.input_hashes.emplace_back(path, hash_file_hex(path));
    return read_rays_file(path);
}

// Accepts a literal graph6 string or @FILE holding one.
Graph load_graph6(Ctx& ctx, const std::string& arg) {
    std::string s = arg;
    if (!s.empty() && s[0] == '@') {
        std::string path = s.substr(1);
        ctx.input_hashes.emplace_back(path, hash_file_hex(path));
        std::ifstream in(path);
        if (!in) throw error("cannot read file: " + path);
        std::getline(in, s);
    }
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return from_graph6(s);
}

std::string modal_ray_string(const ModalRaySet& rays, int idx) {
    return std::visit(
        [&](const auto& rs) { return to_string(rs.rays[static_cast<std::size_t>(idx)]); },
        rays);
}

// ---------------------------------------------------------------- graph ---

struct GraphOpts {
    std::string rays, fixture, graph6_arg, out;
    double tol = kFloatTol;
    int d = 0;
};

Graph load_any_graph(Ctx& ctx, const GraphOpts& o, int* dim_out = nullptr) {
    if (!o.graph6_arg.empty()) {
        if (!o.rays.empty() || !o.fixture.empty())
            throw error("give --graph or a ray source, not both");
        return load_graph6(ctx, o.graph6_arg);
    }
    ModalRaySet rays = load_rays(ctx, o.rays, o.fixture);
    if (dim_out) *dim_out = modal_dim(rays);
    return build_orthogonality_graph(rays, o.tol);
}

int run_graph_build(Ctx& ctx, const GraphOpts& o) {
    ModalRaySet rays = load_rays(ctx, o.rays, o.fixture);
    Graph g = build_orthogonality_graph(rays, o.tol);
    std::string g6 = to_graph6(g);
    if (!o.out.empty()) write_text_file(ctx, o.out, g6 + "\n");
    std::ostringstream human;
    if (!ctx.quiet) human << "n=" << g.n() << " edges=" << g.edge_count() << "\n";
    human << g6 << "\n";
    emit(ctx, json{{"n", g.n()}, {"edges", g.edge_count()}, {"graph6", g6}}, human.str());
    return 0;
}

int run_graph_chromatic(Ctx& ctx, const GraphOpts& o) {
    Graph g = load_any_graph(ctx, o);
    ChromaticCertificate cert = chromatic_number(g);
    std::ostringstream human;
    human << "chi=" << cert.chi << "\n";
    human << "coloring:";
    for (int c : cert.coloring) human << " " << c;
    human << "\nclique:";
    for (int v : mask_to_vertices(cert.clique)) human << " " << v;
    human << (cert.clique_tight ? " (tight lower bound)\n" : "\n");
    if (!cert.clique_tight && cert.exhausted_below)
        human << "lower bound: exhaustive search found no " << cert.chi - 1
              << "-coloring\n";
    emit(ctx,
         json{{"chi", cert.chi},
              {"coloring", cert.coloring},
              {"clique", mask_to_vertices(cert.clique)},
              {"clique_tight", cert.clique_tight},
              {"exhausted_below", cert.exhausted_below}},
         human.str());
    return 0;
}

int run_graph_ks_color(Ctx& ctx, const GraphOpts& o) {
    int dim = 0;
    Graph g = load_any_graph(ctx, o, &dim);
    int d = o.d > 0 ? o.d : (dim > 0 ? dim : 3);
    auto green = ks_colorable(g, d);
    if (green && !verify_ks_coloring(g, d, *green))
        throw error("internal: assignment failed independent re-check");
    std::ostringstream human;
    human << "ks_colorable=" << (green ? "true" : "false") << " (d=" << d << ")\n";
    json assignment = json::array();
    if (green) {
        human << "green vertices:";
        for (int v = 0; v < g.n(); ++v) {
            assignment.push_back((*green)[static_cast<std::size_t>(v)] ? 1 : 0);
            if ((*green)[static_cast<std::size_t>(v)]) human << " " << v;
        }
        human << "\n";
    }
    emit(ctx, json{{"d", d}, {"ks_colorable", static_cast<bool>(green)}, {"assignment", assignment}},
         human.str());
    return 0;
}

// ------------------------------------------------------------ enumerate ---

int run_enumerate(Ctx& ctx, int max_n, bool count_only, const std::string& out) {
    if (ctx.json_out && !count_only && out.empty())
        throw error("--json needs --out FILE for the graph6 stream (or --count-only)");

    std::ofstream out_file;
    std::ostream* stream = nullptr;
    if (!count_only) {
        if (!out.empty()) {
            out_file.open(out);
            if (!out_file) throw error("cannot write file: " + out);
            ctx.output_paths.push_back(out);
            stream = &out_file;
        } else {
            stream = &std::cout;
        }
    }

    std::vector<long long> counts(static_cast<std::size_t>(max_n), 0);
    GenTask task;
    task.n_max = max_n;
    task.connected_only = true;
    task.threads = resolve_threads(ctx);
    task.emit = [&](const Graph& g) {
        ++counts[static_cast<std::size_t>(g.n() - 1)];
        if (stream) *stream << to_graph6(g) << "\n";
    };
    enumerate_connected_square_free(task);

    std::ostringstream human;
    if (!ctx.quiet) {
        for (int n = 1; n <= max_n; ++n)
            human << "n=" << n << " count=" << counts[static_cast<std::size_t>(n - 1)] << "\n";
        human << "wall_time_s=" << ctx.timer.seconds() << "\n";
    }
    emit(ctx,
         json{{"n", max_n},
              {"counted", counts},
              {"candidates", json::array()},
              {"wall_time_s", ctx.timer.seconds()}},
         human.str());
    return 0;
}

int run_candidates(Ctx& ctx, int max_n, int d, const std::string& out) {
    std::vector<Graph> found = find_sic_candidates(max_n, d, resolve_threads(ctx));
    json list = json::array();
    std::ostringstream human, lines;
    for (const Graph& g : found) {
        list.push_back(to_graph6(g));
        lines << to_graph6(g) << "\n";
    }
    if (!out.empty()) write_text_file(ctx, out, lines.str());
    human << lines.str() << "candidates: " << found.size() << " (chi > " << d
          << ", n <= " << max_n << ")\n";
    emit(ctx,
         json{{"n", max_n},
              {"counted", nullptr},
              {"candidates", list},
              {"wall_time_s", ctx.timer.seconds()}},
         human.str());
    return 0;
}

// ------------------------------------------------------------ represent ---

int run_represent(Ctx& ctx, const std::string& graph_arg, int dim, int restarts,
                  double tol_orth, double tol_sep, const std::string& out) {
    RepProblem p;
    p.graph = load_graph6(ctx, graph_arg);
    p.d = dim;
    p.tol_orth = tol_orth;
    p.tol_sep = tol_sep;
    RepResult res = numeric_represent(p, restarts, ctx.seed, resolve_threads(ctx));
    bool found = res.status == RepStatus::found;
    if (found && !out.empty())
        write_rays_file(out, ModalRaySet(*res.rays)), ctx.output_paths.push_back(out);

    std::ostringstream human;
    human << "status=" << (found ? "found" : "not_found_after_restarts") << "\n"
          << "residual=" << res.residual << " restarts_used=" << res.restarts_used
          << " used_complex=" << (res.used_complex ? "true" : "false") << "\n";
    if (found && !out.empty()) human << "rays written to " << out << "\n";
    emit(ctx,
         json{{"status", found ? "found" : "not_found_after_restarts"},
              {"dim", dim},
              {"residual", res.residual},
              {"restarts_used", res.restarts_used},
              {"used_complex", res.used_complex},
              {"out", out.empty() ? json() : json(out)}},
         human.str());
    return 0;
}

// --------------------------------------------------------------- refute ---

int run_refute(Ctx& ctx) {
    RefutationReport rep = refute_obstruction();
    json samples = json::array();
    for (const RefutationSample& s : rep.highlighted) {
        samples.push_back({{"t1", to_string(s.t1)},
                           {"t2", to_string(s.t2)},
                           {"t3", to_string(s.t3)},
                           {"gh_matches_stated_form", s.gh_matches_stated_form},
                           {"ef_matches_stated_form", s.ef_matches_stated_form},
                           {"candidates_not_proportional", s.candidates_not_proportional},
                           {"key_identity_holds", s.key_identity_holds}});
    }
    std::ostringstream human;
    human << "status=" << rep.status << "\n"
          << "grid_points_checked=" << rep.grid_points_checked << "\n"
          << "stated_forms_all_match=" << (rep.stated_forms_all_match ? "true" : "false")
          << "\n"
          << "key_identity_certified=" << (rep.key_identity_certified ? "true" : "false")
          << "\n"
          << "cross_positive_on_grid=" << (rep.cross_positive_on_grid ? "true" : "false")
          << "\n"
          << "degenerate_cases_pinned=" << (rep.degenerate_cases_pinned ? "true" : "false")
          << "\n";
    if (!ctx.quiet)
        for (const std::string& note : rep.degenerate_notes) human << "  " << note << "\n";
    emit(ctx,
         json{{"status", rep.status},
              {"grid_points_checked", rep.grid_points_checked},
              {"stated_forms_all_match", rep.stated_forms_all_match},
              {"key_identity_certified", rep.key_identity_certified},
              {"cross_positive_on_grid", rep.cross_positive_on_grid},
              {"degenerate_cases_pinned", rep.degenerate_cases_pinned},
              {"degenerate_notes", rep.degenerate_notes},
              {"samples", samples}},
         human.str());
    return rep.status == "refuted" ? 0 : 1;
}

// --------------------------------------------------------- supersinglet ---

int run_supersinglet(Ctx& ctx, int d, bool check_invariance, int trials) {
    StateVector s = supersinglet(d);
    json amps = json::array();
    std::ostringstream human;
    for (int idx = 0; idx < s.amps.size(); ++idx) {
        std::complex<double> a = s.amps[idx];
        if (std::abs(a) < 1e-15) continue;
        std::string ket;
        long long rem = idx;
        for (int k = d - 1; k >= 0; --k) {
            ket.insert(ket.begin(), static_cast<char>('0' + rem % d));
            rem /= d;
        }
        char line[128];
        std::snprintf(line, sizeof line, "|%s\xE2\x9F\xA9 %.12g %.12g\n", ket.c_str(),
                      a.real(), a.imag());
        human << line;
        amps.push_back({{"ket", ket}, {"re", a.real()}, {"im", a.imag()}});
    }

    json report{{"d", d}, {"amplitudes", amps}};
    if (check_invariance) {
        std::mt19937_64 rng = make_rng(fork_seed(ctx.seed, "invariance"));
        double worst = 0.0;
        for (int t = 0; t < trials; ++t)
            worst = std::max(worst, check_unitary_invariance(d, random_su(d, rng)));
        human << "max_invariance_deviation=" << worst << " over " << trials
              << " random special unitaries\n";
        report["max_invariance_deviation"] = worst;
        report["trials"] = trials;
    }
    emit(ctx, report, human.str());
    return 0;
}

// ----------------------------------------------------------------- game ---

json game_spec_to_json(const GameSpec& spec) {
    json rays = json::array();
    for (int i = 0; i < spec.registry_size(); ++i)
        rays.push_back({{"index", i},
                        {"label", spec.labels[static_cast<std::size_t>(i)]},
                        {"ray", modal_ray_string(spec.rays, i)},
                        {"in_c", spec.in_c(i)}});
    json bases = json::array();
    for (const std::vector<int>& b : spec.bases) {
        json members = json::array(), strs = json::array();
        for (int idx : b) {
            members.push_back(idx);
            strs.push_back(modal_ray_string(spec.rays, idx));
        }
        bases.push_back({{"members", members}, {"rays", strs}});
    }
    return json{{"format", "contextlab-game-spec"},
                {"d", spec.d},
                {"c_size", spec.c_size},
                {"chi_c", spec.chi_c},
                {"chi_warning", spec.chi_warning},
                {"canonical_completion_used", spec.canonical_completion_used},
                {"mode", is_exact(spec.rays) ? "exact" : "float"},
                {"rays_text", format_rays(spec.rays)},
                {"rays", rays},
                {"bases", bases}};
}

GameSpec game_spec_from_json(const json& j) {
    GameSpec spec;
    spec.d = j.at("d").get<int>();
    spec.c_size = j.at("c_size").get<int>();
    spec.chi_c = j.value("chi_c", 0);
    spec.chi_warning = j.value("chi_warning", false);
    spec.canonical_completion_used = j.value("canonical_completion_used", false);
    std::istringstream in(j.at("rays_text").get<std::string>());
    spec.rays = parse_rays(in);
    spec.labels =
        std::visit([](const auto& rs) { return rs.labels; }, spec.rays);
    if (spec.labels.empty())
        for (int i = 0; i < spec.registry_size(); ++i)
            spec.labels.push_back("r" + std::to_string(i));
    for (const json& b : j.at("bases")) {
        std::vector<int> members = b.at("members").get<std::vector<int>>();
        if (static_cast<int>(members.size()) != spec.d)
            throw error("spec basis does not have d members");
        for (int idx : members)
            if (idx < 0 || idx >= spec.registry_size())
                throw error("spec basis member out of range");
        spec.bases.push_back(std::move(members));
    }
    if (spec.bases.empty()) throw error("spec has no bases");
    return spec;
}

GameSpec load_game_spec(Ctx& ctx, const std::string& path) {
    ctx.input_hashes.emplace_back(path, hash_file_hex(path));
    std::ifstream in(path);
    if (!in) throw error("cannot read file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw error("spec file is not valid JSON: " + path);
    return game_spec_from_json(j);
}

int run_game_build(Ctx& ctx, const GraphOpts& o) {
    ModalRaySet rays = load_rays(ctx, o.rays, o.fixture);
    int d = o.d > 0 ? o.d : modal_dim(rays);
    GameSpec spec = build_game(rays, d);
    json j = game_spec_to_json(spec);
    j["manifest"] = manifest_json(ctx);
    std::string text = j.dump(2) + "\n";
    if (!o.out.empty()) {
        write_text_file(ctx, o.out, text);
        std::ostringstream human;
        human << "bases=" << spec.basis_count() << " registry=" << spec.registry_size()
              << " (|C|=" << spec.c_size << ", |C'|=" << spec.registry_size() - spec.c_size
              << ") chi_c=" << spec.chi_c << "\n"
              << "spec written to " << o.out << "\n";
        if (spec.chi_warning)
            human << "warning: chi(G_C) <= d, classical players can win this game\n";
        emit(ctx,
             json{{"out", o.out},
                  {"d", spec.d},
                  {"bases", spec.basis_count()},
                  {"c_size", spec.c_size},
                  {"completions", spec.registry_size() - spec.c_size},
                  {"chi_c", spec.chi_c},
                  {"chi_warning", spec.chi_warning}},
             human.str());
    } else {
        std::cout << text;
    }
    return 0;
}

ClassicalStrategy strategy_from_json_file(Ctx& ctx, const GameSpec& spec,
                                          const std::string& path) {
    ctx.input_hashes.emplace_back(path, hash_file_hex(path));
    std::ifstream in(path);
    if (!in) throw error("cannot read file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw error("strategy file is not valid JSON: " + path);
    ClassicalStrategy s;
    s.answer = j.at("answer").get<std::vector<std::vector<int>>>();
    validate_strategy(spec, s);
    return s;
}

int run_game_simulate(Ctx& ctx, const std::string& spec_path, const std::string& strategy,
                      long long rounds) {
    GameSpec spec = load_game_spec(ctx, spec_path);
    GameStats st;
    if (strategy == "quantum") {
        st = simulate_game_quantum(spec, rounds, ctx.seed);
    } else {
        ClassicalStrategy s = strategy_from_json_file(ctx, spec, strategy);
        st = simulate_game_classical(spec, s, rounds, ctx.seed);
    }
    std::ostringstream human;
    human << "rounds=" << st.rounds << " wins=" << st.wins << " losses=" << st.losses
          << " (rule i: " << st.rule_i_losses << ", rule ii: " << st.rule_ii_losses
          << ")\n";
    emit(ctx,
         json{{"strategy", strategy},
              {"rounds", st.rounds},
              {"wins", st.wins},
              {"losses", st.losses},
              {"rule_i_losses", st.rule_i_losses},
              {"rule_ii_losses", st.rule_ii_losses}},
         human.str());
    return 0;
}

// ----------------------------------------------------------------- bell ---

json bell_terms_json(const BellExpression& expr) {
    json terms = json::array();
    for (const BellTerm& t : expr.terms) {
        json e{{"type", t.type == 1 ? "i" : "ii"},
               {"p", t.p},
               {"basis_p", t.basis_p},
               {"basis_rest", t.basis_rest},
               {"shared", t.shared},
               {"shared_ray", modal_ray_string(expr.spec.rays, t.shared)}};
        if (t.type == 1) e["q"] = t.q;
        terms.push_back(e);
    }
    return terms;
}

int run_bell_build(Ctx& ctx, const std::string& spec_path, const std::string& out) {
    GameSpec spec = load_game_spec(ctx, spec_path);
    BellExpression expr = build_bell_expression(spec);
    json j{{"format", "contextlab-bell-expression"},
           {"d", spec.d},
           {"omega_qm", expr.omega_qm()},
           {"raw_term_count", expr.raw_term_count},
           {"terms", bell_terms_json(expr)}};
    j["manifest"] = manifest_json(ctx);
    std::string text = j.dump(2) + "\n";
    if (!out.empty()) {
        write_text_file(ctx, out, text);
        std::ostringstream human;
        human << "terms=" << expr.omega_qm() << " raw=" << expr.raw_term_count
              << "\nexpression written to " << out << "\n";
        emit(ctx,
             json{{"out", out},
                  {"omega_qm", expr.omega_qm()},
                  {"raw_term_count", expr.raw_term_count}},
             human.str());
    } else {
        std::cout << text;
    }
    return 0;
}

int run_bell_eval(Ctx& ctx, const std::string& spec_path, const std::string& strategy) {
    GameSpec spec = load_game_spec(ctx, spec_path);
    BellExpression expr = build_bell_expression(spec);
    std::ostringstream human;
    json report{{"omega_qm", expr.omega_qm()}, {"raw_term_count", expr.raw_term_count}};
    if (strategy == "quantum") {
        double value = evaluate_bell_quantum(expr);
        human << "quantum value=" << value << " omega_qm=" << expr.omega_qm() << "\n";
        report["strategy"] = "quantum";
        report["value"] = value;
        report["matches_term_count"] =
            std::abs(value - static_cast<double>(expr.omega_qm())) < 1e-8;
    } else {
        ClassicalStrategy s = strategy_from_json_file(ctx, spec, strategy);
        long long value = classical_score(expr, s);
        human << "classical value=" << value << " omega_qm=" << expr.omega_qm() << "\n";
        report["strategy"] = strategy;
        report["value"] = value;
        report["matches_term_count"] = value == expr.omega_qm();
    }
    emit(ctx, report, human.str());
    return 0;
}

int run_bell_bounds(Ctx& ctx, const std::string& spec_path, long long limit) {
    GameSpec spec = load_game_spec(ctx, spec_path);
    BellExpression expr = build_bell_expression(spec);
    BoundReport r = bell_bounds(expr, limit);
    std::ostringstream human;
    human << "omega_qm=" << r.omega_qm << " qm_value=" << r.qm_value << "\n"
          << "lhv_attains_max=" << (r.lhv_attains_max ? "true" : "false")
          << " (chi=" << r.chi_c << ", d=" << r.d << ")\n";
    if (r.lhv_bound)
        human << "lhv_bound=" << *r.lhv_bound << " (exact)\n";
    else
        human << "lhv_bound: absent; best found " << r.lhv_lower << ", upper bound "
              << r.lhv_upper << "\n";
    human << "method=" << r.method << "\n";
    emit(ctx,
         json{{"d", r.d},
              {"omega_qm", r.omega_qm},
              {"raw_term_count", r.raw_terms},
              {"qm_value", r.qm_value},
              {"lhv_attains_max", r.lhv_attains_max},
              {"chi_c", r.chi_c},
              {"lhv_bound", r.lhv_bound ? json(*r.lhv_bound) : json()},
              {"lhv_lower", r.lhv_lower},
              {"lhv_upper", r.lhv_upper},
              {"method", r.method}},
         human.str());
    return 0;
}

// ------------------------------------------------------ verify-theorem2 ---

int run_verify(Ctx& ctx, int max_n) {
    std::vector<Graph> candidates = find_sic_candidates(max_n, 3, resolve_threads(ctx));
    bool unique = candidates.size() == 1;
    bool contains =
        unique ? subgraph_contains(candidates.front(), ten_vertex_obstruction()) : false;
    RefutationReport rep = refute_obstruction();
    bool refuted = rep.status == "refuted";
    bool complete = max_n >= 12 && unique && contains && refuted;
    std::string conclusion = complete
                                 ? "no SIC-capable set below 13 vectors"
                                 : "verification incomplete (needs --max-n >= 12, a unique "
                                   "candidate, containment, and the refutation)";

    json list = json::array();
    for (const Graph& g : candidates) list.push_back(to_graph6(g));
    std::ostringstream human;
    human << "candidates: " << candidates.size()
          << "; contains appendix subgraph: " << (contains ? "true" : "false")
          << "; representation refuted: " << (refuted ? "true" : "false")
          << "; conclusion: " << conclusion << "\n";
    emit(ctx,
         json{{"max_n", max_n},
              {"candidates", list},
              {"contains_appendix_subgraph", contains},
              {"representation_refuted", refuted},
              {"conclusion", conclusion},
              {"wall_time_s", ctx.timer.seconds()}},
         human.str());
    return complete ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Ctx ctx;
    {
        std::ostringstream cmd;
        for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
        ctx.command = cmd.str();
    }

    CLI::App app{"state-independent contextuality toolkit"};
    app.require_subcommand(1);
    app.add_option("--seed", ctx.seed, "seed for all randomized stages");
    app.add_flag("--json", ctx.json_out, "machine-readable report on stdout");
    app.add_flag("--quiet", ctx.quiet, "suppress non-essential output");
    app.add_option("--threads", ctx.threads,
                   "worker threads (default: CONTEXTLAB_THREADS or hardware)");

    int runner = -1;  // index into dispatch table below
    GraphOpts graph_opts;
    int max_n = 12, enum_d = 3, ss_d = 3, ss_trials = 100, rep_dim = 3, rep_restarts = 200;
    bool count_only = false, ss_check = false;
    double rep_tol_orth = 1e-7, rep_tol_sep = 1e-3;
    std::string enum_out, rep_graph, rep_out, spec_path, strategy = "quantum", bell_out;
    long long rounds = 10000, bell_limit = 100000000;

    auto* graph_cmd = app.add_subcommand("graph", "orthogonality graph tools");
    graph_cmd->require_subcommand(1);
    graph_cmd->fallthrough();
    auto add_ray_inputs = [&](CLI::App* sub, bool with_graph) {
        sub->add_option("--rays", graph_opts.rays, ".rays input file");
        sub->add_option("--fixture", graph_opts.fixture,
                        "built-in ray set: v13, v13+1, v13+2, axes, bowtie");
        sub->add_option("--tol", graph_opts.tol, "orthogonality tolerance (float mode)");
        if (with_graph)
            sub->add_option("--graph", graph_opts.graph6_arg, "graph6 string or @FILE");
        sub->fallthrough();
    };
    auto* gb = graph_cmd->add_subcommand("build", "rays -> orthogonality graph");
    add_ray_inputs(gb, false);
    gb->add_option("--out", graph_opts.out, "write graph6 here");
    gb->callback([&] { runner = 0; });
    auto* gc = graph_cmd->add_subcommand("chromatic", "chromatic number with certificate");
    add_ray_inputs(gc, true);
    gc->callback([&] { runner = 1; });
    auto* gk = graph_cmd->add_subcommand("ks-color", "exactly-one-green assignment search");
    add_ray_inputs(gk, true);
    gk->add_option("--d", graph_opts.d, "clique size to constrain (default: ray dimension)");
    gk->callback([&] { runner = 2; });

    auto* en = app.add_subcommand("enumerate", "connected square-free graph enumeration");
    en->add_option("--max-n", max_n, "largest vertex count")->required();
    en->add_flag("--count-only", count_only, "skip the graph6 stream");
    en->add_option("--out", enum_out, "graph6 stream file");
    en->fallthrough();
    en->callback([&] { runner = 3; });

    auto* ca = app.add_subcommand("candidates", "square-free graphs with chi > d");
    ca->add_option("--max-n", max_n, "largest vertex count")->required();
    ca->add_option("--d", enum_d, "dimension bound (default 3)");
    ca->add_option("--out", enum_out, "write candidate graph6 lines here");
    ca->fallthrough();
    ca->callback([&] { runner = 4; });

    auto* re = app.add_subcommand("represent", "numeric faithful representation search");
    re->add_option("--graph", rep_graph, "graph6 string or @FILE")->required();
    re->add_option("--dim", rep_dim, "target dimension");
    re->add_option("--restarts", rep_restarts, "random restarts per phase");
    re->add_option("--tol-orth", rep_tol_orth, "edge orthogonality tolerance");
    re->add_option("--tol-sep", rep_tol_sep, "non-edge separation tolerance");
    re->add_option("--out", rep_out, "write found rays here");
    re->fallthrough();
    re->callback([&] { runner = 5; });

    auto* rf = app.add_subcommand("refute-appendix",
                                  "exact impossibility argument for the 10-vertex graph");
    rf->fallthrough();
    rf->callback([&] { runner = 6; });

    auto* ss = app.add_subcommand("supersinglet", "totally antisymmetric state tools");
    ss->add_option("--d", ss_d, "local dimension = party count (2..5)");
    ss->add_flag("--check-invariance", ss_check, "probe U^(x)d invariance");
    ss->add_option("--trials", ss_trials, "random unitaries to test");
    ss->fallthrough();
    ss->callback([&] { runner = 7; });

    auto* game_cmd = app.add_subcommand("game", "nonlocal game tools");
    game_cmd->require_subcommand(1);
    game_cmd->fallthrough();
    auto* gml = game_cmd->add_subcommand("build", "rays -> game spec JSON");
    add_ray_inputs(gml, false);
    gml->add_option("--d", graph_opts.d, "dimension / party count (default: ray dimension)");
    gml->add_option("--out", graph_opts.out, "spec JSON output file");
    gml->callback([&] { runner = 8; });
    auto* gms = game_cmd->add_subcommand("simulate", "play rounds against the referee");
    gms->add_option("--spec", spec_path, "game spec JSON")->required();
    gms->add_option("--strategy", strategy, "'quantum' or a strategy JSON file");
    gms->add_option("--rounds", rounds, "rounds to play");
    gms->fallthrough();
    gms->callback([&] { runner = 9; });

    auto* bell_cmd = app.add_subcommand("bell", "Bell expression tools");
    bell_cmd->require_subcommand(1);
    bell_cmd->fallthrough();
    auto* bb = bell_cmd->add_subcommand("build", "spec -> zero-probability term list");
    bb->add_option("--spec", spec_path, "game spec JSON")->required();
    bb->add_option("--out", bell_out, "expression JSON output file");
    bb->callback([&] { runner = 10; });
    auto* be = bell_cmd->add_subcommand("eval", "evaluate the expression for a strategy");
    be->add_option("--spec", spec_path, "game spec JSON")->required();
    be->add_option("--strategy", strategy, "'quantum' or a strategy JSON file");
    be->fallthrough();
    be->callback([&] { runner = 11; });
    auto* bo = bell_cmd->add_subcommand("bounds", "quantum value and LHV bound report");
    bo->add_option("--spec", spec_path, "game spec JSON")->required();
    bo->add_option("--limit", bell_limit, "deterministic-strategy evaluation cap");
    bo->fallthrough();
    bo->callback([&] { runner = 12; });

    auto* vt = app.add_subcommand(
        "verify-theorem2", "enumerate, filter chi>3, check containment, run refutation");
    vt->add_option("--max-n", max_n, "largest vertex count (the claim needs 12)");
    vt->fallthrough();
    vt->callback([&] { runner = 13; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        switch (runner) {
            case 0: return run_graph_build(ctx, graph_opts);
            case 1: return run_graph_chromatic(ctx, graph_opts);
            case 2: return run_graph_ks_color(ctx, graph_opts);
            case 3: return run_enumerate(ctx, max_n, count_only, enum_out);
            case 4: return run_candidates(ctx, max_n, enum_d, enum_out);
            case 5:
                return run_represent(ctx, rep_graph, rep_dim, rep_restarts, rep_tol_orth,
                                     rep_tol_sep, rep_out);
            case 6: return run_refute(ctx);
            case 7: return run_supersinglet(ctx, ss_d, ss_check, ss_trials);
            case 8: return run_game_build(ctx, graph_opts);
            case 9: return run_game_simulate(ctx, spec_path, strategy, rounds);
            case 10: return run_bell_build(ctx, spec_path, bell_out);
            case 11: return run_bell_eval(ctx, spec_path, strategy);
            case 12: return run_bell_bounds(ctx, spec_path, bell_limit);
            case 13: return run_verify(ctx, max_n);
            default: throw error("no subcommand selected");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
