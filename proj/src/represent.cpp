#include "contextlab/represent.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <thread>

#include "contextlab/rng.hpp"

namespace contextlab {

namespace {

const std::vector<std::string> kObstructionLabels = {"AB", "AC", "AD", "BF", "BH",
                                                     "CG", "DE", "EF", "EG", "GH"};

double conj_of(double x) { return x; }
std::complex<double> conj_of(const std::complex<double>& z) { return std::conj(z); }

template <class Sc>
struct Core {
    using Mat = Eigen::Matrix<Sc, Eigen::Dynamic, Eigen::Dynamic>;

    const RepProblem& p;
    int n;

    explicit Core(const RepProblem& p) : p(p), n(p.graph.n()) {}

    // Penalty over unit columns: squared inner products on edges, squared
    // hinges pushing non-edges away from orthogonality and every pair away
    // from ray coincidence.
    double penalty(const Mat& V, double* max_edge = nullptr, bool* sep_ok = nullptr) const {
        double L = 0, worst_edge = 0;
        bool sep = true;
        const double s = p.tol_sep;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double a = std::abs(V.col(i).dot(V.col(j)));
                if (p.graph.has_edge(i, j)) {
                    L += a * a;
                    worst_edge = std::max(worst_edge, a);
                } else if (a < s) {
                    L += (s - a) * (s - a);
                    sep = false;
                }
                double t = a - (1.0 - s);
                if (t > 0) {
                    L += t * t;
                    if (!p.graph.has_edge(i, j)) sep = false;
                }
            }
        if (max_edge) *max_edge = worst_edge;
        if (sep_ok) *sep_ok = sep;
        return L;
    }

    Mat gradient(const Mat& V) const {
        Mat G = Mat::Zero(p.d, n);
        const double s = p.tol_sep;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Sc ip = V.col(i).dot(V.col(j));
                double a = std::abs(ip);
                double w = 0;
                if (p.graph.has_edge(i, j)) {
                    w += 1.0;
                } else if (a > 1e-12 && a < s) {
                    w += -(s - a) / a;
                }
                double t = a - (1.0 - s);
                if (t > 0 && a > 1e-12) w += t / a;
                if (w == 0) continue;
                G.col(i) += (w * conj_of(ip)) * V.col(j);
                G.col(j) += (w * ip) * V.col(i);
            }
        return G;
    }

    void normalize_cols(Mat& V, std::mt19937_64& rng) const {
        std::normal_distribution<double> nd(0.0, 1.0);
        for (int i = 0; i < n; ++i) {
            double nm = V.col(i).norm();
            if (nm < 1e-9) {
                for (int k = 0; k < p.d; ++k) V(k, i) = random_entry(rng, nd);
                nm = V.col(i).norm();
            }
            V.col(i) /= nm;
        }
    }

    static Sc random_entry(std::mt19937_64& rng, std::normal_distribution<double>& nd) {
        if constexpr (std::is_same_v<Sc, double>) {
            return nd(rng);
        } else {
            double re = nd(rng), im = nd(rng);
            return Sc(re, im);
        }
    }

    Mat random_start(std::mt19937_64& rng) const {
        std::normal_distribution<double> nd(0.0, 1.0);
        Mat V(p.d, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < p.d; ++k) V(k, i) = random_entry(rng, nd);
        normalize_cols(V, rng);
        return V;
    }

    // Cyclic exact re-orthogonalization: each vertex moves to the least
    // eigenvector of its neighbors' projector sum. Drives edge inner
    // products to machine precision when started near a solution.
    void polish(Mat& V) const {
        using Herm = Eigen::Matrix<Sc, Eigen::Dynamic, Eigen::Dynamic>;
        for (int sweep = 0; sweep < 500; ++sweep) {
            for (int i = 0; i < n; ++i) {
                if (p.graph.degree(i) == 0) continue;
                Herm M = Herm::Zero(p.d, p.d);
                for (uint64_t m = p.graph.neighbors(i); m;) {
                    int j = __builtin_ctzll(m);
                    m &= m - 1;
                    M += V.col(j) * V.col(j).adjoint();
                }
                Eigen::SelfAdjointEigenSolver<Herm> es(M);
                V.col(i) = es.eigenvectors().col(0);
            }
            double worst = 0;
            for (int i = 0; i < n; ++i)
                for (uint64_t m = p.graph.neighbors(i); m;) {
                    int j = __builtin_ctzll(m);
                    m &= m - 1;
                    if (j > i) worst = std::max(worst, std::abs(V.col(i).dot(V.col(j))));
                }
            if (worst < 1e-13) return;
        }
    }

    FloatRaySet to_rays(const Mat& V) const {
        std::vector<FloatVec> vecs;
        vecs.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            FloatVec v(p.d);
            for (int k = 0; k < p.d; ++k) {
                if constexpr (std::is_same_v<Sc, double>) {
                    v[k] = FloatScalar(V(k, i), 0.0);
                } else {
                    v[k] = V(k, i);
                }
            }
            vecs.push_back(std::move(v));
        }
        return FloatRaySet::from_vectors(vecs);
    }

    struct Attempt {
        bool success = false;
        double penalty_value = 0;
        std::optional<FloatRaySet> rays;
    };

    Attempt run(uint64_t seed) const {
        std::mt19937_64 rng = make_rng(seed);
        Mat V = random_start(rng);
        double L = penalty(V);
        double step = 1.0;
        int stalled = 0;
        for (int iter = 0; iter < 5000 && L > 1e-28; ++iter) {
            Mat G = gradient(V);
            double gn2 = G.squaredNorm();
            if (gn2 < 1e-26) break;
            double eta = step;
            bool moved = false;
            for (int half = 0; half < 60; ++half) {
                Mat cand = V - eta * G;
                normalize_cols(cand, rng);
                double Lc = penalty(cand);
                if (Lc <= L - 1e-4 * eta * gn2) {
                    double drop = L - Lc;
                    V = std::move(cand);
                    L = Lc;
                    step = std::min(eta * 2.0, 4.0);
                    moved = true;
                    stalled = drop < 1e-16 ? stalled + 1 : 0;
                    break;
                }
                eta *= 0.5;
            }
            if (!moved || stalled > 50) break;
        }

        Attempt out;
        double max_edge = 0;
        bool sep_ok = false;
        out.penalty_value = penalty(V, &max_edge, &sep_ok);
        if (max_edge < 1e-2 && sep_ok) {
            polish(V);
            out.penalty_value = penalty(V, &max_edge, &sep_ok);
            FloatRaySet rs = [&]() -> FloatRaySet {
                try {
                    return to_rays(V);
                } catch (const error&) {
                    return FloatRaySet{};  // collapsed rays: treated as failure below
                }
            }();
            if (rs.size() == n &&
                verify_representation(rs, p.graph, p.tol_orth, p.tol_sep)) {
                out.success = true;
                out.rays = std::move(rs);
            }
        }
        return out;
    }
};

// Runs all restart indices of one phase (deterministic per-index seeds),
// returning the lowest succeeding index or -1; fills best penalty seen.
template <class Sc>
int run_phase(const RepProblem& p, int restarts, uint64_t seed, uint64_t phase_tag, int threads,
              Core<Sc>& core, typename Core<Sc>::Attempt& winner, double& best_penalty) {
    std::atomic<int> win_idx{restarts};
    std::mutex mu;
    std::vector<std::optional<typename Core<Sc>::Attempt>> results(
        static_cast<size_t>(restarts));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int idx = next.fetch_add(1);
            if (idx >= restarts) return;
            if (idx > win_idx.load()) continue;  // a lower index already won
            auto att = core.run(fork_seed(seed, phase_tag * 1000003ull +
                                                    static_cast<uint64_t>(idx)));
            if (att.success) {
                int cur = win_idx.load();
                while (idx < cur && !win_idx.compare_exchange_weak(cur, idx)) {
                }
            }
            std::lock_guard<std::mutex> lk(mu);
            results[static_cast<size_t>(idx)] = std::move(att);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (int idx = 0; idx < restarts; ++idx) {
        const auto& r = results[static_cast<size_t>(idx)];
        if (!r) continue;
        best_penalty = std::min(best_penalty, r->penalty_value);
        if (r->success) {
            winner = *r;
            return idx;
        }
    }
    return -1;
}

}  // namespace

Graph ten_vertex_obstruction() {
    const auto& labels = ten_vertex_obstruction_labels();
    Graph g(static_cast<int>(labels.size()));
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            const std::string &a = labels[static_cast<size_t>(i)], &b = labels[static_cast<size_t>(j)];
            bool share = a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
            if (share) g.add_edge(i, j);
        }
    return g;
}

const std::vector<std::string>& ten_vertex_obstruction_labels() { return kObstructionLabels; }

double representation_penalty(const RepProblem& p, const std::vector<FloatVec>& vecs) {
    if (static_cast<int>(vecs.size()) != p.graph.n()) throw error("vector count mismatch");
    Core<std::complex<double>> core(p);
    Eigen::MatrixXcd V(p.d, p.graph.n());
    for (int i = 0; i < p.graph.n(); ++i) {
        if (vecs[static_cast<size_t>(i)].dim() != p.d) throw error("dimension mismatch");
        for (int k = 0; k < p.d; ++k) V(k, i) = vecs[static_cast<size_t>(i)][k];
        double nm = V.col(i).norm();
        if (nm < 1e-12) throw error("zero vector");
        V.col(i) /= nm;
    }
    return core.penalty(V);
}

RepResult numeric_represent(const RepProblem& p, int restarts, uint64_t seed, int threads) {
    if (restarts < 1) throw error("restarts must be >= 1");
    if (p.d < 2) throw error("dimension must be >= 2");
    if (!(p.tol_orth > 0 && p.tol_sep > p.tol_orth))
        throw error("need 0 < tol_orth < tol_sep");
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());

    RepResult out;
    double best_penalty = std::numeric_limits<double>::infinity();

    Core<double> real_core(p);
    typename Core<double>::Attempt real_win;
    int idx = run_phase(p, restarts, seed, 1, threads, real_core, real_win, best_penalty);
    if (idx >= 0) {
        out.status = RepStatus::found;
        out.rays = std::move(real_win.rays);
        out.residual = real_win.penalty_value;
        out.restarts_used = idx + 1;
        return out;
    }

    Core<std::complex<double>> cx_core(p);
    typename Core<std::complex<double>>::Attempt cx_win;
    idx = run_phase(p, restarts, seed, 2, threads, cx_core, cx_win, best_penalty);
    if (idx >= 0) {
        out.status = RepStatus::found;
        out.rays = std::move(cx_win.rays);
        out.residual = cx_win.penalty_value;
        out.restarts_used = restarts + idx + 1;
        out.used_complex = true;
        return out;
    }

    out.status = RepStatus::not_found_after_restarts;
    out.residual = best_penalty;
    out.restarts_used = 2 * restarts;
    out.used_complex = true;  // both phases were consumed
    return out;
}

}  // namespace contextlab
