// Graph isomorphism for difference-graph workloads: refine on the
// neighborhood-class quotient (classes are huge in these graphs, the
// quotient is small), backtrack with individualization on the quotient,
// then extend class-by-class and verify the full bijection.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace gdiff {
namespace detail {

// One round of joint color refinement on two quotient graphs. Colors are
// comparable across the two graphs; returns false when the color
// histograms diverge (the graphs cannot be isomorphic).
inline bool refine_colors(const SimpleGraph& a, const SimpleGraph& b, std::vector<int>& ca,
                          std::vector<int>& cb) {
    for (;;) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const SimpleGraph& g, const std::vector<int>& col, int v) {
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(col[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            return Sig{col[static_cast<std::size_t>(v)], std::move(nb)};
        };
        std::map<Sig, int> dict;
        std::vector<Sig> sa, sb;
        for (int v = 0; v < a.vertex_count(); ++v) sa.push_back(signature(a, ca, v));
        for (int v = 0; v < b.vertex_count(); ++v) sb.push_back(signature(b, cb, v));
        for (const Sig& s : sa) dict.emplace(s, 0);
        for (const Sig& s : sb) dict.emplace(s, 0);
        int next = 0;
        for (auto& [sig, id] : dict) id = next++;
        std::vector<int> na(ca.size()), nb(cb.size());
        std::map<int, int> hist_a, hist_b;
        for (std::size_t v = 0; v < sa.size(); ++v) {
            na[v] = dict[sa[v]];
            ++hist_a[na[v]];
        }
        for (std::size_t v = 0; v < sb.size(); ++v) {
            nb[v] = dict[sb[v]];
            ++hist_b[nb[v]];
        }
        if (hist_a != hist_b) return false;
        // stable once the number of color cells stops growing
        std::map<int, int> old_hist;
        for (int c : ca) ++old_hist[c];
        bool stable = hist_a.size() == old_hist.size();
        ca = std::move(na);
        cb = std::move(nb);
        if (stable) return true;
    }
}

inline bool quotient_search(const SimpleGraph& a, const SimpleGraph& b, std::vector<int> ca,
                            std::vector<int> cb, std::vector<int>& mapping) {
    if (!refine_colors(a, b, ca, cb)) return false;
    int n = a.vertex_count();
    // find a color with multiplicity > 1
    std::map<int, std::vector<int>> cells_a, cells_b;
    for (int v = 0; v < n; ++v) cells_a[ca[static_cast<std::size_t>(v)]].push_back(v);
    for (int v = 0; v < n; ++v) cells_b[cb[static_cast<std::size_t>(v)]].push_back(v);
    int split_color = -1;
    for (const auto& [c, vs] : cells_a)
        if (vs.size() > 1) {
            split_color = c;
            break;
        }
    if (split_color == -1) {
        // discrete: colors define the candidate bijection
        std::vector<int> m(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(v)] = cells_b[ca[static_cast<std::size_t>(v)]].front();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a.adjacent(u, v) !=
                    b.adjacent(m[static_cast<std::size_t>(u)], m[static_cast<std::size_t>(v)]))
                    return false;
        mapping = std::move(m);
        return true;
    }
    int u = cells_a[split_color].front();
    int fresh = 1 << 30;
    for (int v : cells_b[split_color]) {
        std::vector<int> ca2 = ca, cb2 = cb;
        ca2[static_cast<std::size_t>(u)] = fresh;
        cb2[static_cast<std::size_t>(v)] = fresh;
        if (quotient_search(a, b, std::move(ca2), std::move(cb2), mapping)) return true;
    }
    return false;
}

}  // namespace detail

// Verified edge-preserving bijection g -> h, or absent when the graphs are
// not isomorphic.
inline std::optional<std::vector<int>> are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.vertex_count() != h.vertex_count()) return std::nullopt;
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    int n = g.vertex_count();
    if (n == 0) return std::vector<int>{};

    ClassPartition cg = neighborhood_classes(g);
    ClassPartition ch = neighborhood_classes(h);
    if (cg.classes.size() != ch.classes.size()) return std::nullopt;

    // initial quotient colors from (class size, member degree)
    std::map<std::pair<std::int64_t, std::int64_t>, int> dict;
    for (std::size_t i = 0; i < cg.classes.size(); ++i)
        dict.emplace(std::make_pair(cg.class_size[i], cg.class_degree[i]), 0);
    for (std::size_t i = 0; i < ch.classes.size(); ++i)
        dict.emplace(std::make_pair(ch.class_size[i], ch.class_degree[i]), 0);
    int next = 0;
    for (auto& [k, id] : dict) id = next++;
    std::vector<int> ca, cb;
    for (std::size_t i = 0; i < cg.classes.size(); ++i)
        ca.push_back(dict[std::make_pair(cg.class_size[i], cg.class_degree[i])]);
    for (std::size_t i = 0; i < ch.classes.size(); ++i)
        cb.push_back(dict[std::make_pair(ch.class_size[i], ch.class_degree[i])]);
    {
        std::map<int, int> ha, hb;
        for (int c : ca) ++ha[c];
        for (int c : cb) ++hb[c];
        if (ha != hb) return std::nullopt;
    }

    std::vector<int> qmap;
    if (!detail::quotient_search(cg.quotient, ch.quotient, ca, cb, qmap)) return std::nullopt;

    // extend: classes mapped by qmap, members paired in index order.
    // class sizes agree because size is part of the initial color.
    std::vector<int> full(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cg.classes.size(); ++i) {
        const auto& src = cg.classes[i];
        const auto& dst = ch.classes[static_cast<std::size_t>(qmap[i])];
        if (src.size() != dst.size()) return std::nullopt;
        for (std::size_t j = 0; j < src.size(); ++j)
            full[static_cast<std::size_t>(src[j])] = dst[j];
    }
    // verify on the full graphs
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) !=
                h.adjacent(full[static_cast<std::size_t>(u)], full[static_cast<std::size_t>(v)]))
                return std::nullopt;
    return full;
}

}  // namespace gdiff
