#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "contextlab/fixtures.hpp"
#include "contextlab/represent.hpp"

using namespace contextlab;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

double max_edge_overlap(const FloatRaySet& rays, const Graph& g) {
    double worst = 0.0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            if (!g.has_edge(i, j)) continue;
            const FloatVec& u = rays.rays[static_cast<std::size_t>(i)].vec();
            const FloatVec& v = rays.rays[static_cast<std::size_t>(j)].vec();
            double nu = std::sqrt(std::abs(inner_product(u, u)));
            double nv = std::sqrt(std::abs(inner_product(v, v)));
            worst = std::max(worst, std::abs(inner_product(u, v)) / (nu * nv));
        }
    return worst;
}

}  // namespace

TEST_CASE("five-cycle admits a dimension-3 representation") {
    RepProblem p;
    p.graph = cycle(5);
    p.d = 3;
    RepResult res = numeric_represent(p, 50, 777, 2);
    REQUIRE(res.status == RepStatus::found);
    REQUIRE(res.rays.has_value());
    CHECK(verify_representation(*res.rays, p.graph, p.tol_orth, p.tol_sep));
    CHECK(max_edge_overlap(*res.rays, p.graph) < 1e-10);
}

TEST_CASE("13-ray orthogonality graph is recovered numerically") {
    RepProblem p;
    p.graph = build_orthogonality_graph(ModalRaySet(thirteen_vector_set()));
    p.d = 3;
    RepResult res = numeric_represent(p, 200, 20240817, 4);
    REQUIRE(res.status == RepStatus::found);
    CHECK(verify_representation(*res.rays, p.graph, p.tol_orth, p.tol_sep));
    CHECK(max_edge_overlap(*res.rays, p.graph) < 1e-10);
    // Faithfulness is two-sided: re-building the orthogonality graph from
    // the found rays reproduces the input graph exactly.
    Graph back = build_orthogonality_graph(*res.rays, 1e-6);
    CHECK(back == p.graph);
}

TEST_CASE("obstruction graph defeats the search") {
    RepProblem p;
    p.graph = ten_vertex_obstruction();
    p.d = 3;
    RepResult res = numeric_represent(p, 60, 99, 4);
    CHECK(res.status == RepStatus::not_found_after_restarts);
    CHECK_FALSE(res.rays.has_value());
    CHECK(res.used_complex);  // the real phase alone must not be the last word
    CHECK(res.restarts_used >= 60);
    CHECK(res.residual > 0.0);
}

TEST_CASE("search is deterministic for a fixed seed") {
    RepProblem p;
    p.graph = cycle(5);
    RepResult a = numeric_represent(p, 30, 5, 1);
    RepResult b = numeric_represent(p, 30, 5, 3);  // thread count must not matter
    REQUIRE(a.status == RepStatus::found);
    REQUIRE(b.status == RepStatus::found);
    CHECK(a.restarts_used == b.restarts_used);
    CHECK(a.residual == doctest::Approx(b.residual).epsilon(1e-12));
    REQUIRE(a.rays->size() == b.rays->size());
    for (int i = 0; i < a.rays->size(); ++i)
        CHECK(ray_equal(a.rays->rays[static_cast<std::size_t>(i)],
                        b.rays->rays[static_cast<std::size_t>(i)], 1e-9));
}

TEST_CASE("penalty is unitary invariant and zero exactly on solutions") {
    RepProblem p;
    p.graph = cycle(5);
    RepResult res = numeric_represent(p, 50, 31337, 2);
    REQUIRE(res.status == RepStatus::found);

    std::vector<FloatVec> vecs;
    for (const FloatRay& r : res.rays->rays) vecs.push_back(r.vec());
    double base = representation_penalty(p, vecs);
    CHECK(base < 1e-18);

    // Rotate everything by a fixed unitary: penalties only see Gram data.
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    // Random rotation built by Gram-Schmidt on a Gaussian 3x3 real matrix.
    std::vector<FloatVec> cols(3, FloatVec(3));
    for (auto& c : cols)
        for (int k = 0; k < 3; ++k) c[k] = gauss(rng);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            FloatScalar ip = inner_product(cols[static_cast<std::size_t>(j)],
                                           cols[static_cast<std::size_t>(i)]);
            cols[static_cast<std::size_t>(i)] =
                cols[static_cast<std::size_t>(i)] - ip * cols[static_cast<std::size_t>(j)];
        }
        double n = std::sqrt(std::abs(inner_product(cols[static_cast<std::size_t>(i)],
                                                    cols[static_cast<std::size_t>(i)])));
        for (int k = 0; k < 3; ++k) cols[static_cast<std::size_t>(i)][k] /= n;
    }
    std::vector<FloatVec> rotated;
    for (const FloatVec& v : vecs) {
        FloatVec w(3);
        for (int r = 0; r < 3; ++r) {
            FloatScalar acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += cols[static_cast<std::size_t>(k)][r] * v[k];
            w[r] = acc;
        }
        rotated.push_back(w);
    }
    CHECK(representation_penalty(p, rotated) == doctest::Approx(base).epsilon(1e-9));

    // Breaking one orthogonality raises the penalty strictly.
    std::vector<FloatVec> broken = vecs;
    broken[0] = broken[0] - FloatScalar(-0.3) * broken[1];
    CHECK(representation_penalty(p, broken) > 1e-4);
}

TEST_CASE("verification is strict in both directions") {
    // Three mutually orthogonal rays labeled as a path: the missing edge 0-2
    // is present in the Gram data, so the representation is unfaithful.
    std::vector<FloatVec> vecs(3, FloatVec(3));
    vecs[0][0] = 1.0;
    vecs[1][1] = 1.0;
    vecs[2][2] = 1.0;
    FloatRaySet rays = FloatRaySet::from_vectors(vecs);
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(verify_representation(rays, path));

    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    CHECK(verify_representation(rays, tri));

    ExactRaySet exact = thirteen_vector_set();
    Graph g13 = build_orthogonality_graph(ModalRaySet(exact));
    CHECK(verify_representation(exact, g13));
}
