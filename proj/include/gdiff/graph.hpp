// Undirected graphs over packed bit rows, neighborhood-class partitions,
// bipartiteness, strong products, deterministic shuffling and bipartite
// hulls. Everything is deterministic with lexicographic tie-breaking.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gdiff {

class SimpleGraph {
public:
    SimpleGraph() : n_(0), words_(0) {}
    explicit SimpleGraph(int n)
        : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
          rows_(static_cast<std::size_t>(n) * ((static_cast<std::size_t>(n) + 63) / 64), 0) {}

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("SimpleGraph: no loops");
        set_bit(u, v);
        set_bit(v, u);
    }

    void remove_edge(int u, int v) {
        clear_bit(u, v);
        clear_bit(v, u);
    }

    bool adjacent(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
                (v % 64)) & 1;
    }

    int degree(int v) const {
        int d = 0;
        for (std::size_t w = 0; w < words_; ++w)
            d += __builtin_popcountll(rows_[static_cast<std::size_t>(v) * words_ + w]);
        return d;
    }

    std::int64_t edge_count() const {
        std::int64_t total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adjacent(v, u)) out.push_back(u);
        return out;
    }

    // The packed adjacency row of v; rows compare equal iff the open
    // neighborhoods are equal.
    const std::uint64_t* row(int v) const {
        return rows_.data() + static_cast<std::size_t>(v) * words_;
    }
    std::size_t row_words() const { return words_; }

    bool same_row(int u, int v) const {
        const std::uint64_t* a = row(u);
        const std::uint64_t* b = row(v);
        for (std::size_t w = 0; w < words_; ++w)
            if (a[w] != b[w]) return false;
        return true;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const SimpleGraph&) const = default;

private:
    void set_bit(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
            std::uint64_t{1} << (v % 64);
    }
    void clear_bit(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] &=
            ~(std::uint64_t{1} << (v % 64));
    }

    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

class DirectedGraph {
public:
    DirectedGraph() : n_(0) {}
    explicit DirectedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

    int vertex_count() const { return n_; }
    void add_arc(int u, int v) {
        if (u == v) throw std::invalid_argument("DirectedGraph: no loops");
        adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    }
    bool arc(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
    std::int64_t arc_count() const {
        std::int64_t c = 0;
        for (char b : adj_) c += b;
        return c;
    }
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (arc(u, v)) out.emplace_back(u, v);
        return out;
    }
    bool operator==(const DirectedGraph&) const = default;

private:
    int n_;
    std::vector<char> adj_;
};

// Partition of the vertex set by exact open-neighborhood equality, with
// the induced quotient. Classes are ordered by their smallest member.
struct ClassPartition {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    std::vector<std::int64_t> class_size;
    std::vector<std::int64_t> class_degree;
    SimpleGraph quotient;
};

inline ClassPartition neighborhood_classes(const SimpleGraph& g) {
    ClassPartition cp;
    int n = g.vertex_count();
    cp.class_of.assign(static_cast<std::size_t>(n), -1);
    std::map<std::vector<std::uint64_t>, int> seen;
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint64_t> key(g.row(v), g.row(v) + g.row_words());
        auto it = seen.find(key);
        if (it == seen.end()) {
            int id = static_cast<int>(cp.classes.size());
            seen.emplace(std::move(key), id);
            cp.classes.push_back({v});
            cp.class_of[static_cast<std::size_t>(v)] = id;
        } else {
            cp.classes[static_cast<std::size_t>(it->second)].push_back(v);
            cp.class_of[static_cast<std::size_t>(v)] = it->second;
        }
    }
    int c = static_cast<int>(cp.classes.size());
    cp.quotient = SimpleGraph(c);
    for (int i = 0; i < c; ++i) {
        cp.class_size.push_back(static_cast<std::int64_t>(cp.classes[static_cast<std::size_t>(i)].size()));
        cp.class_degree.push_back(g.degree(cp.classes[static_cast<std::size_t>(i)].front()));
    }
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
            if (g.adjacent(cp.classes[static_cast<std::size_t>(i)].front(),
                           cp.classes[static_cast<std::size_t>(j)].front()))
                cp.quotient.add_edge(i, j);
    return cp;
}

// Strong product: vertex (u,v) has index u*|h| + v; distinct pairs are
// adjacent when each coordinate is adjacent-or-equal.
inline SimpleGraph strong_product(const SimpleGraph& g, const SimpleGraph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    SimpleGraph out(ng * nh);
    for (int u1 = 0; u1 < ng; ++u1)
        for (int v1 = 0; v1 < nh; ++v1)
            for (int u2 = u1; u2 < ng; ++u2) {
                if (u2 != u1 && !g.adjacent(u1, u2)) continue;
                for (int v2 = (u2 == u1 ? v1 + 1 : 0); v2 < nh; ++v2) {
                    if (v2 != v1 && !h.adjacent(v1, v2)) continue;
                    out.add_edge(u1 * nh + v1, u2 * nh + v2);
                }
            }
    return out;
}

// BFS 2-coloring; absent when some component has an odd cycle. Isolated
// vertices get color 0.
inline std::optional<std::vector<int>> is_bipartite(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    q.push(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

// Present iff g is K_{s,t} with s,t >= 1 and no isolated vertices.
// Returns sizes as (min, max).
inline std::optional<std::pair<int, int>> is_complete_bipartite(const SimpleGraph& g) {
    auto coloring = is_bipartite(g);
    if (!coloring) return std::nullopt;
    int n = g.vertex_count();
    if (n < 2) return std::nullopt;
    int s = 0, t = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) return std::nullopt;
        ((*coloring)[static_cast<std::size_t>(v)] == 0 ? s : t)++;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool cross = (*coloring)[static_cast<std::size_t>(u)] !=
                         (*coloring)[static_cast<std::size_t>(v)];
            if (cross != g.adjacent(u, v)) return std::nullopt;
        }
    return std::make_pair(std::min(s, t), std::max(s, t));
}

// Induced subgraph on vertices of degree >= 1; the map records original
// indices (new -> old).
inline std::pair<SimpleGraph, std::vector<int>> remove_isolated(const SimpleGraph& g) {
    std::vector<int> keep;
    std::vector<int> newid(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) {
            newid[static_cast<std::size_t>(v)] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    SimpleGraph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(out), std::move(keep)};
}

// Small splittable 64-bit generator with published constants (splitmix64).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Deterministic seeded vertex permutation; returned permutation maps
// new index -> old index.
inline std::pair<SimpleGraph, std::vector<int>> shuffle(const SimpleGraph& g, std::uint64_t seed) {
    int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    SplitMix64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    SimpleGraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                out.add_edge(u, v);
    return {std::move(out), std::move(perm)};
}

// Seeded complete-bipartite hull: Y := N(v), X := {w : Y subset of N(w)}.
// Present iff X and Y are disjoint independent sets; then (X, Y) induces
// a complete bipartite subgraph in which v has the SDK property.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartite_hull(
    const SimpleGraph& g, int v) {
    if (g.degree(v) == 0) return std::nullopt;
    std::vector<int> Y = g.neighbors(v);
    std::vector<char> inY(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int y : Y) inY[static_cast<std::size_t>(y)] = 1;
    std::vector<int> X;
    for (int w = 0; w < g.vertex_count(); ++w) {
        bool covers = true;
        for (int y : Y)
            if (!g.adjacent(w, y)) {
                covers = false;
                break;
            }
        if (covers) X.push_back(w);
    }
    for (int x : X)
        if (inY[static_cast<std::size_t>(x)]) return std::nullopt;
    auto independent = [&](const std::vector<int>& part) {
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (g.adjacent(part[i], part[j])) return false;
        return true;
    };
    if (!independent(X) || !independent(Y)) return std::nullopt;
    return std::make_pair(std::move(X), std::move(Y));
}

// True iff X, Y are independent, every X-Y pair is an edge, and no outside
// vertex is adjacent to all of X or to all of Y.
inline bool is_maximal_complete_bipartite(const SimpleGraph& g, const std::vector<int>& X,
                                          const std::vector<int>& Y) {
    if (X.empty() || Y.empty()) return false;
    std::vector<char> inside(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int x : X) inside[static_cast<std::size_t>(x)] = 1;
    for (int y : Y) {
        if (inside[static_cast<std::size_t>(y)]) return false;
        inside[static_cast<std::size_t>(y)] = 1;
    }
    auto independent = [&](const std::vector<int>& part) {
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (g.adjacent(part[i], part[j])) return false;
        return true;
    };
    if (!independent(X) || !independent(Y)) return false;
    for (int x : X)
        for (int y : Y)
            if (!g.adjacent(x, y)) return false;
    auto dominates = [&](int w, const std::vector<int>& part) {
        for (int u : part)
            if (!g.adjacent(w, u)) return false;
        return true;
    };
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (inside[static_cast<std::size_t>(w)]) continue;
        if (dominates(w, X) || dominates(w, Y)) return false;
    }
    return true;
}

}  // namespace gdiff
