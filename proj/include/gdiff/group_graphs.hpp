// Constructors for the directed power graph, power graph, enhanced power
// graph and difference graph of a two-prime abelian group. Each graph that
// has a fast adjacency criterion is built both definitionally and via the
// criterion; a disagreement throws internal_mismatch_error.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "abelian.hpp"
#include "graph.hpp"

namespace gdiff {

// Packed boolean matrix used for cyclic-membership tables.
class BitTable {
public:
    BitTable() : n_(0), words_(0) {}
    explicit BitTable(std::int64_t n)
        : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
          bits_(static_cast<std::size_t>(n) * ((static_cast<std::size_t>(n) + 63) / 64), 0) {}

    void set(std::int64_t i, std::int64_t j) {
        bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] |=
            std::uint64_t{1} << (j % 64);
    }
    bool get(std::int64_t i, std::int64_t j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] >>
                (j % 64)) & 1;
    }
    bool rows_intersect(std::int64_t i, std::int64_t j) const {
        const std::uint64_t* a = bits_.data() + static_cast<std::size_t>(i) * words_;
        const std::uint64_t* b = bits_.data() + static_cast<std::size_t>(j) * words_;
        for (std::size_t w = 0; w < words_; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }
    // row i a subset of row j
    bool row_subset(std::int64_t i, std::int64_t j) const {
        const std::uint64_t* a = bits_.data() + static_cast<std::size_t>(i) * words_;
        const std::uint64_t* b = bits_.data() + static_cast<std::size_t>(j) * words_;
        for (std::size_t w = 0; w < words_; ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    }
    std::int64_t row_popcount(std::int64_t i) const {
        std::int64_t c = 0;
        for (std::size_t w = 0; w < words_; ++w)
            c += __builtin_popcountll(bits_[static_cast<std::size_t>(i) * words_ + w]);
        return c;
    }
    std::int64_t row_intersection_count(std::int64_t i, std::int64_t j) const {
        const std::uint64_t* a = bits_.data() + static_cast<std::size_t>(i) * words_;
        const std::uint64_t* b = bits_.data() + static_cast<std::size_t>(j) * words_;
        std::int64_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
        return c;
    }

private:
    std::int64_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Cyclic-membership table of one Sylow part: get(x, y) iff y in <x>.
inline BitTable sylow_membership_table(const SylowSpec& s) {
    ResidueSystem rs(s.moduli());
    BitTable t(rs.size);
    for (std::int64_t x = 0; x < rs.size; ++x) {
        auto cx = rs.coords(x);
        std::int64_t ord = rs.order_of(cx);
        std::vector<std::int64_t> cur(cx.size(), 0);
        for (std::int64_t m = 0; m < ord; ++m) {
            t.set(x, rs.index(cur));
            cur = rs.add(cur, cx);
        }
    }
    return t;
}

// Precomputed order/membership tables for one GroupSpec. Elements are
// addressed by index x = iA * |B| + iB (lexicographic over coordinates).
class GroupCache {
public:
    explicit GroupCache(GroupSpec spec, bool with_full_tables = true)
        : spec_(std::move(spec)), rs_a_(spec_.sylow_a.moduli()), rs_b_(spec_.sylow_b.moduli()) {
        na_ = rs_a_.size;
        nb_ = rs_b_.size;
        n_ = na_ * nb_;
        in_cyc_a_ = sylow_membership_table(spec_.sylow_a);
        in_cyc_b_ = sylow_membership_table(spec_.sylow_b);
        order_a_.resize(static_cast<std::size_t>(na_));
        order_b_.resize(static_cast<std::size_t>(nb_));
        for (std::int64_t i = 0; i < na_; ++i) order_a_[static_cast<std::size_t>(i)] = rs_a_.order_of(rs_a_.coords(i));
        for (std::int64_t i = 0; i < nb_; ++i) order_b_[static_cast<std::size_t>(i)] = rs_b_.order_of(rs_b_.coords(i));
        maximal_a_ = compute_maximal(in_cyc_a_, na_);
        maximal_b_ = compute_maximal(in_cyc_b_, nb_);
        if (with_full_tables) build_full_tables();
    }

    const GroupSpec& spec() const { return spec_; }
    std::int64_t size() const { return n_; }
    std::int64_t part_a_size() const { return na_; }
    std::int64_t part_b_size() const { return nb_; }
    std::int64_t a_of(std::int64_t x) const { return x / nb_; }
    std::int64_t b_of(std::int64_t x) const { return x % nb_; }

    GroupElement element(std::int64_t x) const {
        return {rs_a_.coords(a_of(x)), rs_b_.coords(b_of(x))};
    }
    std::int64_t index_of(const GroupElement& e) const {
        return rs_a_.index(e.coords_a) * nb_ + rs_b_.index(e.coords_b);
    }

    std::int64_t order_of(std::int64_t x) const {
        return order_a_[static_cast<std::size_t>(a_of(x))] *
               order_b_[static_cast<std::size_t>(b_of(x))];
    }
    std::int64_t order_a(std::int64_t i) const { return order_a_[static_cast<std::size_t>(i)]; }
    std::int64_t order_b(std::int64_t i) const { return order_b_[static_cast<std::size_t>(i)]; }

    bool in_cyclic_a(std::int64_t x, std::int64_t y) const { return in_cyc_a_.get(x, y); }
    bool in_cyclic_b(std::int64_t x, std::int64_t y) const { return in_cyc_b_.get(x, y); }
    bool strict_power_a(std::int64_t x, std::int64_t y) const {
        return in_cyc_a_.get(x, y) && !in_cyc_a_.get(y, x);
    }
    bool strict_power_b(std::int64_t x, std::int64_t y) const {
        return in_cyc_b_.get(x, y) && !in_cyc_b_.get(y, x);
    }
    bool maximal_a(std::int64_t i) const { return maximal_a_[static_cast<std::size_t>(i)]; }
    bool maximal_b(std::int64_t i) const { return maximal_b_[static_cast<std::size_t>(i)]; }
    std::int64_t maximal_a_count() const { return count(maximal_a_); }
    std::int64_t maximal_b_count() const { return count(maximal_b_); }

    const BitTable& membership_a() const { return in_cyc_a_; }
    const BitTable& membership_b() const { return in_cyc_b_; }

    bool has_full_tables() const { return full_tables_; }
    // y in <x>, full-group table built by a definitional multiple scan
    bool in_cyclic(std::int64_t x, std::int64_t y) const {
        require_full();
        return in_cyc_.get(x, y);
    }
    bool strict_power(std::int64_t x, std::int64_t y) const {
        require_full();
        return in_cyc_.get(x, y) && !in_cyc_.get(y, x);
    }
    // some z has both x and y in <z>
    bool shares_cyclic(std::int64_t x, std::int64_t y) const {
        require_full();
        return containers_.rows_intersect(x, y);
    }

private:
    static std::vector<char> compute_maximal(const BitTable& in_cyc, std::int64_t n) {
        std::vector<char> m(static_cast<std::size_t>(n), 1);
        for (std::int64_t x = 0; x < n; ++x)
            for (std::int64_t z = 0; z < n; ++z)
                if (in_cyc.get(z, x) && !in_cyc.get(x, z)) {
                    m[static_cast<std::size_t>(x)] = 0;
                    break;
                }
        return m;
    }
    static std::int64_t count(const std::vector<char>& v) {
        std::int64_t c = 0;
        for (char b : v) c += b;
        return c;
    }

    void build_full_tables() {
        in_cyc_ = BitTable(n_);
        containers_ = BitTable(n_);
        for (std::int64_t x = 0; x < n_; ++x) {
            std::vector<std::int64_t> ca = rs_a_.coords(a_of(x));
            std::vector<std::int64_t> cb = rs_b_.coords(b_of(x));
            std::int64_t ord = rs_a_.order_of(ca) * rs_b_.order_of(cb);
            std::vector<std::int64_t> ta(ca.size(), 0), tb(cb.size(), 0);
            for (std::int64_t m = 0; m < ord; ++m) {
                std::int64_t y = rs_a_.index(ta) * nb_ + rs_b_.index(tb);
                in_cyc_.set(x, y);
                containers_.set(y, x);
                ta = rs_a_.add(ta, ca);
                tb = rs_b_.add(tb, cb);
            }
        }
        full_tables_ = true;
    }

    void require_full() const {
        if (!full_tables_)
            throw std::logic_error("GroupCache: full tables were not requested");
    }

    GroupSpec spec_;
    ResidueSystem rs_a_, rs_b_;
    std::int64_t na_ = 0, nb_ = 0, n_ = 0;
    std::vector<std::int64_t> order_a_, order_b_;
    BitTable in_cyc_a_, in_cyc_b_;
    std::vector<char> maximal_a_, maximal_b_;
    bool full_tables_ = false;
    BitTable in_cyc_;       // full group, y in <x>
    BitTable containers_;   // transpose: z with x in <z>
};

// Arc x -> y iff y is a power of x.
inline DirectedGraph directed_power_graph(const GroupCache& c) {
    DirectedGraph d(static_cast<int>(c.size()));
    for (std::int64_t x = 0; x < c.size(); ++x)
        for (std::int64_t y = 0; y < c.size(); ++y)
            if (x != y && c.in_cyclic(x, y)) d.add_arc(static_cast<int>(x), static_cast<int>(y));
    return d;
}

inline SimpleGraph power_graph(const GroupCache& c) {
    SimpleGraph g(static_cast<int>(c.size()));
    for (std::int64_t x = 0; x < c.size(); ++x)
        for (std::int64_t y = x + 1; y < c.size(); ++y)
            if (c.in_cyclic(x, y) || c.in_cyclic(y, x))
                g.add_edge(static_cast<int>(x), static_cast<int>(y));
    return g;
}

// Enhanced power graph of one Sylow part on its own element indexing.
inline SimpleGraph sylow_enhanced_graph(const SylowSpec& s) {
    BitTable in_cyc = sylow_membership_table(s);
    ResidueSystem rs(s.moduli());
    // containers: z with x in <z>
    BitTable cont(rs.size);
    for (std::int64_t x = 0; x < rs.size; ++x)
        for (std::int64_t y = 0; y < rs.size; ++y)
            if (in_cyc.get(x, y)) cont.set(y, x);
    SimpleGraph g(static_cast<int>(rs.size));
    for (std::int64_t x = 0; x < rs.size; ++x)
        for (std::int64_t y = x + 1; y < rs.size; ++y)
            if (cont.rows_intersect(x, y)) g.add_edge(static_cast<int>(x), static_cast<int>(y));
    return g;
}

// Built definitionally (two elements adjacent iff some cyclic subgroup
// contains both) and via the per-Sylow strong product; the two must agree.
inline SimpleGraph enhanced_power_graph(const GroupCache& c) {
    SimpleGraph g(static_cast<int>(c.size()));
    for (std::int64_t x = 0; x < c.size(); ++x)
        for (std::int64_t y = x + 1; y < c.size(); ++y)
            if (c.shares_cyclic(x, y)) g.add_edge(static_cast<int>(x), static_cast<int>(y));
    SimpleGraph product =
        strong_product(sylow_enhanced_graph(c.spec().sylow_a), sylow_enhanced_graph(c.spec().sylow_b));
    if (!(g == product))
        throw internal_mismatch_error("enhanced power graph disagrees with strong product");
    return g;
}

// Fast adjacency criterion: (a1,b1) ~ (a2,b2) iff a1 ->> a2 and b2 ->> b1,
// or symmetrically.
inline bool diff_adjacent(const GroupCache& c, std::int64_t x, std::int64_t y) {
    std::int64_t a1 = c.a_of(x), b1 = c.b_of(x), a2 = c.a_of(y), b2 = c.b_of(y);
    return (c.strict_power_a(a1, a2) && c.strict_power_b(b2, b1)) ||
           (c.strict_power_a(a2, a1) && c.strict_power_b(b1, b2));
}

inline bool diff_adjacent(const GroupSpec& g, const GroupElement& u, const GroupElement& v) {
    if (u == v) throw group_error("diff_adjacent: elements must differ");
    auto part_strict = [](const SylowSpec& s, const std::vector<std::int64_t>& x,
                          const std::vector<std::int64_t>& y) {
        ResidueSystem rs(s.moduli());
        auto contains = [&](const std::vector<std::int64_t>& gen,
                            const std::vector<std::int64_t>& tgt) {
            std::vector<std::int64_t> cur(gen.size(), 0);
            std::int64_t ord = rs.order_of(gen);
            for (std::int64_t m = 0; m < ord; ++m) {
                if (cur == tgt) return true;
                cur = rs.add(cur, gen);
            }
            return false;
        };
        return contains(x, y) && !contains(y, x);
    };
    check_shape(g, u);
    check_shape(g, v);
    return (part_strict(g.sylow_a, u.coords_a, v.coords_a) &&
            part_strict(g.sylow_b, v.coords_b, u.coords_b)) ||
           (part_strict(g.sylow_a, v.coords_a, u.coords_a) &&
            part_strict(g.sylow_b, u.coords_b, v.coords_b));
}

// Difference graph with its vertex labels. Vertices are ordered by
// increasing element index (lexicographic over coordinates).
struct LabeledDiffGraph {
    SimpleGraph graph;
    std::vector<GroupElement> labels;
    std::vector<std::int64_t> element_index;
    GroupSpec spec;
};

// Fast route: vertex set G \ ({e} u M(P) x M(Q)), adjacency by the
// per-Sylow criterion.
inline LabeledDiffGraph difference_graph_fast(const GroupCache& c) {
    std::vector<std::int64_t> verts;
    for (std::int64_t x = 0; x < c.size(); ++x) {
        if (x == 0) continue;
        if (c.maximal_a(c.a_of(x)) && c.maximal_b(c.b_of(x))) continue;
        verts.push_back(x);
    }
    SimpleGraph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (diff_adjacent(c, verts[i], verts[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    LabeledDiffGraph out{std::move(g), {}, verts, c.spec()};
    for (std::int64_t x : verts) out.labels.push_back(c.element(x));
    return out;
}

// Definitional route: enhanced minus power, isolated vertices removed.
inline LabeledDiffGraph difference_graph_definitional(const GroupCache& c) {
    SimpleGraph enh = enhanced_power_graph(c);
    SimpleGraph pow = power_graph(c);
    SimpleGraph diff(static_cast<int>(c.size()));
    for (std::int64_t x = 0; x < c.size(); ++x)
        for (std::int64_t y = x + 1; y < c.size(); ++y)
            if (enh.adjacent(static_cast<int>(x), static_cast<int>(y)) &&
                !pow.adjacent(static_cast<int>(x), static_cast<int>(y)))
                diff.add_edge(static_cast<int>(x), static_cast<int>(y));
    auto [g, keep] = remove_isolated(diff);
    LabeledDiffGraph out{std::move(g), {}, {}, c.spec()};
    for (int v : keep) {
        out.element_index.push_back(v);
        out.labels.push_back(c.element(v));
    }
    return out;
}

// Builds both routes and compares them while the group is small enough;
// above the threshold only the fast criterion is used.
inline LabeledDiffGraph difference_graph(const GroupCache& c,
                                         std::int64_t dual_route_threshold = 5000) {
    LabeledDiffGraph fast = difference_graph_fast(c);
    if (c.size() <= dual_route_threshold) {
        LabeledDiffGraph def = difference_graph_definitional(c);
        if (def.element_index != fast.element_index)
            throw internal_mismatch_error("difference graph vertex sets disagree");
        if (!(def.graph == fast.graph))
            throw internal_mismatch_error("difference graph edge sets disagree");
    }
    return fast;
}

inline LabeledDiffGraph difference_graph(const GroupSpec& spec,
                                         std::int64_t dual_route_threshold = 5000) {
    GroupCache c(spec, spec.order() <= dual_route_threshold);
    return difference_graph(c, dual_route_threshold);
}

}  // namespace gdiff
