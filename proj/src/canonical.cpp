#include "contextlab/canonical.hpp"

#include <algorithm>
#include <map>

namespace contextlab {

bool CanonicalForm::operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    if (rows != o.rows) return rows < o.rows;
    return colors < o.colors;
}

uint64_t CanonicalForm::hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<uint64_t>(n));
    for (uint64_t r : rows) mix(r);
    for (int c : colors) mix(static_cast<uint64_t>(c));
    return h;
}

namespace {

using Cells = std::vector<std::vector<int>>;

uint64_t cell_mask(const std::vector<int>& cell) {
    uint64_t m = 0;
    for (int v : cell) m |= 1ull << v;
    return m;
}

// Equitable refinement: split cells by neighbor counts into other cells
// until stable. Split pieces are ordered by count value, so the procedure
// is label-independent at the cell level.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t si = 0; si < cells.size() && !changed; ++si) {
            uint64_t splitter = cell_mask(cells[si]);
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                std::vector<int>& cell = cells[ci];
                if (cell.size() <= 1) continue;
                std::map<int, std::vector<int>> buckets;
                for (int v : cell)
                    buckets[__builtin_popcountll(g.neighbors(v) & splitter)].push_back(v);
                if (buckets.size() <= 1) continue;
                Cells pieces;
                for (auto& [deg, verts] : buckets) pieces.push_back(std::move(verts));
                cells.erase(cells.begin() + static_cast<long>(ci));
                cells.insert(cells.begin() + static_cast<long>(ci),
                             std::make_move_iterator(pieces.begin()),
                             std::make_move_iterator(pieces.end()));
                changed = true;
                break;
            }
        }
    }
}

struct Searcher {
    const Graph& g;
    int n;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> gens;  // (pi, pi^-1)
    std::vector<int> dsu;
    bool have_best = false;
    std::vector<uint64_t> best_rows;
    std::vector<int> best_label;
    bool have_first = false;
    std::vector<uint64_t> first_rows;
    std::vector<int> first_label;
    std::vector<int> fixed;  // individualized vertices along the current path

    explicit Searcher(const Graph& g) : g(g), n(g.n()), dsu(static_cast<size_t>(g.n())) {
        for (int v = 0; v < n; ++v) dsu[static_cast<size_t>(v)] = v;
    }

    int find(int x) {
        while (dsu[static_cast<size_t>(x)] != x) {
            dsu[static_cast<size_t>(x)] = dsu[static_cast<size_t>(dsu[static_cast<size_t>(x)])];
            x = dsu[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) dsu[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }

    void record_automorphism(const std::vector<int>& pi) {
        bool identity = true;
        for (int v = 0; v < n; ++v)
            if (pi[static_cast<size_t>(v)] != v) {
                identity = false;
                unite(v, pi[static_cast<size_t>(v)]);
            }
        if (identity || gens.size() >= 256) return;
        std::vector<int> inv(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) inv[static_cast<size_t>(pi[static_cast<size_t>(v)])] = v;
        gens.emplace_back(pi, std::move(inv));
    }

    std::vector<uint64_t> relabel_rows(const std::vector<int>& label) const {
        std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            uint64_t row = 0;
            for (uint64_t m = g.neighbors(v); m;) {
                int u = __builtin_ctzll(m);
                m &= m - 1;
                row |= 1ull << label[static_cast<size_t>(u)];
            }
            rows[static_cast<size_t>(label[static_cast<size_t>(v)])] = row;
        }
        return rows;
    }

    // pi = to^-1 ∘ from maps the graph onto itself when both labelings
    // produce identical rows.
    std::vector<int> compose(const std::vector<int>& from, const std::vector<int>& to) const {
        std::vector<int> inv_to(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) inv_to[static_cast<size_t>(to[static_cast<size_t>(v)])] = v;
        std::vector<int> pi(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            pi[static_cast<size_t>(v)] = inv_to[static_cast<size_t>(from[static_cast<size_t>(v)])];
        return pi;
    }

    void leaf(const Cells& cells) {
        std::vector<int> label(static_cast<size_t>(n));
        for (size_t pos = 0; pos < cells.size(); ++pos)
            label[static_cast<size_t>(cells[pos][0])] = static_cast<int>(pos);
        std::vector<uint64_t> rows = relabel_rows(label);
        if (!have_first) {
            have_first = true;
            first_rows = rows;
            first_label = label;
        } else if (rows == first_rows) {
            record_automorphism(compose(label, first_label));
        }
        if (!have_best || rows > best_rows) {
            have_best = true;
            best_rows = rows;
            best_label = label;
        } else if (rows == best_rows) {
            record_automorphism(compose(label, best_label));
        }
    }

    bool prunable(int v, uint64_t done) const {
        for (const auto& [pi, inv] : gens) {
            bool fixes = true;
            for (int u : fixed)
                if (pi[static_cast<size_t>(u)] != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            if ((done >> pi[static_cast<size_t>(v)]) & 1) return true;
            if ((done >> inv[static_cast<size_t>(v)]) & 1) return true;
        }
        return false;
    }

    void descend(Cells cells) {
        refine(g, cells);
        size_t target = cells.size();
        for (size_t ci = 0; ci < cells.size(); ++ci)
            if (cells[ci].size() > 1) {
                target = ci;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        uint64_t done = 0;
        for (int v : cells[target]) {
            if (prunable(v, done)) {
                done |= 1ull << v;
                continue;
            }
            done |= 1ull << v;
            Cells child;
            child.reserve(cells.size() + 1);
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                if (ci == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[ci])
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[ci]);
                }
            }
            fixed.push_back(v);
            descend(std::move(child));
            fixed.pop_back();
        }
    }
};

CanonicalResult run_search(const Graph& g, const std::vector<int>& colors) {
    CanonicalResult out;
    out.form.n = g.n();
    if (g.n() == 0) return out;

    // Initial cells grouped by color value ascending.
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < g.n(); ++v) by_color[colors[static_cast<size_t>(v)]].push_back(v);
    Cells cells;
    for (auto& [c, verts] : by_color) cells.push_back(std::move(verts));

    Searcher s(g);
    s.descend(std::move(cells));

    out.form.rows = s.best_rows;
    out.labeling = s.best_label;
    out.form.colors.resize(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v)
        out.form.colors[static_cast<size_t>(s.best_label[static_cast<size_t>(v)])] =
            colors[static_cast<size_t>(v)];
    out.orbit.resize(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) out.orbit[static_cast<size_t>(v)] = s.find(v);
    return out;
}

}  // namespace

CanonicalResult canonical_form(const Graph& g) {
    std::vector<int> colors(static_cast<size_t>(g.n()), 0);
    CanonicalResult r = run_search(g, colors);
    r.form.colors.clear();  // uncolored form: colors carry no information
    return r;
}

CanonicalResult canonical_form(const Graph& g, const std::vector<int>& vertex_colors) {
    if (static_cast<int>(vertex_colors.size()) != g.n()) throw error("color count mismatch");
    return run_search(g, vertex_colors);
}

std::vector<std::vector<int>> refined_partition(const Graph& g) {
    if (g.n() == 0) return {};
    Cells cells = {std::vector<int>()};
    for (int v = 0; v < g.n(); ++v) cells[0].push_back(v);
    refine(g, cells);
    return cells;
}

bool vertex_in_orbit_of(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw error("vertex out of range");
    if (u == v) return true;
    std::vector<int> cu(static_cast<size_t>(g.n()), 0), cv(static_cast<size_t>(g.n()), 0);
    cu[static_cast<size_t>(u)] = 1;
    cv[static_cast<size_t>(v)] = 1;
    return canonical_form(g, cu).form == canonical_form(g, cv).form;
}

}  // namespace contextlab
