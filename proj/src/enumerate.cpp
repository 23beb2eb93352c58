#include "contextlab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <set>
#include <thread>

#include "contextlab/canonical.hpp"
#include "contextlab/chromatic.hpp"

namespace contextlab {

namespace {

// Adding a vertex adjacent to N keeps the graph square-free iff no two
// members of N share a neighbor, so candidates are the independent sets of
// the "shared neighbor" conflict relation. Visits every candidate once,
// smallest members first, starting with the empty set.
template <class F>
void for_each_candidate(const std::vector<uint64_t>& conflict, int n, uint64_t chosen, int from,
                        F&& f) {
    f(chosen);
    for (int v = from; v < n; ++v) {
        if (chosen & conflict[static_cast<size_t>(v)]) continue;
        for_each_candidate(conflict, n, chosen | (1ull << v), v + 1, f);
    }
}

struct Expander {
    int n_max;
    int collect_n;  // when > 0: nodes of this size are collected, not walked
    std::vector<Graph>* collected;
    const std::function<void(const Graph&)>& sink;

    void expand(const Graph& g) {
        if (collect_n > 0 && g.n() == collect_n) {
            collected->push_back(g);
            return;
        }
        sink(g);
        if (g.n() >= n_max) return;

        std::vector<uint64_t> conflict(static_cast<size_t>(g.n()), 0);
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v)
                if (u != v && (g.neighbors(u) & g.neighbors(v)))
                    conflict[static_cast<size_t>(u)] |= 1ull << v;

        const int x = g.n();  // index of the added vertex in every child
        std::set<CanonicalForm> child_forms;
        for_each_candidate(conflict, g.n(), 0, 0, [&](uint64_t nbrs) {
            Graph h = g.with_added_vertex(nbrs);
            // The vertex deleted by the parent rule sits in the last
            // refinement cell, so x must be there too.
            auto cells = refined_partition(h);
            const std::vector<int>& last = cells.back();
            if (std::find(last.begin(), last.end(), x) == last.end()) return;
            CanonicalResult cr = canonical_form(h);
            bool accept;
            if (last.size() == 1) {
                accept = true;  // x alone in the last cell is the deletion point
            } else {
                int vstar = -1;
                for (int v = 0; v < h.n(); ++v)
                    if (cr.labeling[static_cast<size_t>(v)] == h.n() - 1) {
                        vstar = v;
                        break;
                    }
                accept = vstar == x ||
                         cr.orbit[static_cast<size_t>(vstar)] == cr.orbit[static_cast<size_t>(x)] ||
                         vertex_in_orbit_of(h, x, vstar);
            }
            if (!accept) return;
            // Distinct neighborhoods on one parent can grow isomorphic
            // children; keep one per class.
            if (!child_forms.insert(cr.form).second) return;
            expand(h);
        });
    }
};

// Hands out subtree indices in order and lets the main thread consume
// finished buffers in that same order, keeping a bounded number of
// subtrees in flight.
struct OrderedDrain {
    explicit OrderedDrain(size_t total, size_t window) : total(total), window(window) {
        buffers.resize(total);
        done.assign(total, 0);
    }

    size_t total, window;
    std::mutex mu;
    std::condition_variable cv_main, cv_worker;
    std::vector<std::vector<Graph>> buffers;
    std::vector<char> done;
    size_t claimed = 0;
    size_t drained = 0;

    // Returns total when nothing is left.
    size_t claim() {
        std::unique_lock<std::mutex> lk(mu);
        cv_worker.wait(lk, [&] { return claimed >= total || claimed < drained + window; });
        if (claimed >= total) return total;
        return claimed++;
    }

    void finish(size_t i, std::vector<Graph> buf) {
        std::lock_guard<std::mutex> lk(mu);
        buffers[i] = std::move(buf);
        done[i] = 1;
        cv_main.notify_one();
    }

    template <class F>
    void drain_all(F&& deliver) {
        while (drained < total) {
            std::vector<Graph> buf;
            {
                std::unique_lock<std::mutex> lk(mu);
                cv_main.wait(lk, [&] { return done[drained] != 0; });
                buf = std::move(buffers[drained]);
                ++drained;
                cv_worker.notify_all();
            }
            for (const Graph& g : buf) deliver(g);
        }
    }
};

int greedy_color_count(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.n()), -1);
    int hi = 0;
    for (int v = 0; v < g.n(); ++v) {
        uint64_t used = 0;
        for (uint64_t m = g.neighbors(v); m;) {
            int u = __builtin_ctzll(m);
            m &= m - 1;
            if (color[static_cast<size_t>(u)] >= 0) used |= 1ull << color[static_cast<size_t>(u)];
        }
        int c = __builtin_ctzll(~used);
        color[static_cast<size_t>(v)] = c;
        hi = std::max(hi, c + 1);
    }
    return hi;
}

}  // namespace

void enumerate_connected_square_free(const GenTask& task) {
    if (task.n_max < 1 || task.n_max > 14) throw error("n_max must be in 1..14");
    if (!task.emit) throw error("emit sink required");
    int threads = task.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, threads);

    std::set<CanonicalForm> seen;
    auto deliver = [&](const Graph& g) {
        if (!is_square_free(g)) throw error("internal: emitted graph not square-free");
        if (task.connected_only && !is_connected(g)) return;
        if (task.assert_unique && !seen.insert(canonical_form(g).form).second)
            throw error("internal: duplicate isomorphism class emitted");
        if (task.filter && !task.filter(g)) return;
        task.emit(g);
    };

    // Small trees are walked directly; larger ones split at kSplit vertices
    // into independent subtrees. The two-phase emission order depends only
    // on n_max, never on the thread count.
    constexpr int kSplit = 8;
    if (task.n_max <= kSplit) {
        Expander e{task.n_max, -1, nullptr, deliver};
        e.expand(Graph(1));
        return;
    }

    std::vector<Graph> roots;
    Expander head{task.n_max, kSplit, &roots, deliver};
    head.expand(Graph(1));

    OrderedDrain drain(roots.size(), static_cast<size_t>(threads) * 4 + 4);
    auto worker = [&]() {
        for (;;) {
            size_t i = drain.claim();
            if (i >= roots.size()) return;
            std::vector<Graph> buf;
            std::function<void(const Graph&)> collect = [&buf](const Graph& g) {
                buf.push_back(g);
            };
            Expander e{task.n_max, -1, nullptr, collect};
            e.expand(roots[static_cast<size_t>(i)]);
            drain.finish(i, std::move(buf));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    drain.drain_all(deliver);
    for (auto& th : pool) th.join();
}

std::vector<long long> count_connected_square_free(int n_max, int threads) {
    std::vector<long long> counts(static_cast<size_t>(n_max), 0);
    GenTask task;
    task.n_max = n_max;
    task.connected_only = true;
    task.threads = threads;
    task.emit = [&counts](const Graph& g) { ++counts[static_cast<size_t>(g.n() - 1)]; };
    enumerate_connected_square_free(task);
    return counts;
}

std::vector<Graph> find_sic_candidates(int n_max, int d, int threads) {
    if (d < 3) throw error("d must be >= 3");
    std::vector<Graph> found;
    GenTask task;
    task.n_max = n_max;
    task.connected_only = true;
    task.threads = threads;
    task.filter = [d](const Graph& g) {
        // Degeneracy below d already yields a greedy d-coloring.
        if (k_core(g, d) == 0) return false;
        if (greedy_color_count(g) <= d) return false;
        return !color_within(g, d).has_value();
    };
    task.emit = [&found](const Graph& g) { found.push_back(g); };
    enumerate_connected_square_free(task);
    return found;
}

}  // namespace contextlab
