#include <doctest.h>

#include <algorithm>
#include <set>

#include "gdiff/graph.hpp"
#include "gdiff/group_graphs.hpp"
#include "gdiff/isomorphism.hpp"

using namespace gdiff;

namespace {

SimpleGraph path3() {
    SimpleGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph complete_bipartite(int s, int t) {
    SimpleGraph g(s + t);
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
    return g;
}

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

}  // namespace

TEST_CASE("basic graph invariants") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS(g.add_edge(2, 2));
    std::int64_t degsum = 0;
    for (int v = 0; v < 4; ++v) degsum += g.degree(v);
    CHECK(degsum == 2 * g.edge_count());
}

TEST_CASE("neighborhood classes") {
    auto kb = neighborhood_classes(complete_bipartite(2, 3));
    REQUIRE(kb.classes.size() == 2);
    std::multiset<std::int64_t> sizes(kb.class_size.begin(), kb.class_size.end());
    CHECK(sizes == std::multiset<std::int64_t>{2, 3});

    auto p = neighborhood_classes(path3());
    REQUIRE(p.classes.size() == 2);
    CHECK(p.classes[0] == std::vector<int>{0, 2});
    CHECK(p.classes[1] == std::vector<int>{1});

    // D(C_12): 7 vertices, class sizes {2,2,2,1}
    auto L = difference_graph(make_group(SylowSpec(2, {2}), SylowSpec(3, {1})));
    CHECK(L.graph.vertex_count() == 7);
    auto cp = neighborhood_classes(L.graph);
    std::multiset<std::int64_t> ds(cp.class_size.begin(), cp.class_size.end());
    CHECK(ds == std::multiset<std::int64_t>{2, 2, 2, 1});
}

TEST_CASE("class partition structural invariants on a difference graph") {
    auto L = difference_graph(make_group(SylowSpec(2, {2}), SylowSpec(3, {2})));
    auto cp = neighborhood_classes(L.graph);
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        // members pairwise non-adjacent, degrees equal
        for (std::size_t a = 0; a < cp.classes[i].size(); ++a) {
            CHECK(L.graph.degree(cp.classes[i][a]) == cp.class_degree[i]);
            for (std::size_t b = a + 1; b < cp.classes[i].size(); ++b)
                CHECK_FALSE(L.graph.adjacent(cp.classes[i][a], cp.classes[i][b]));
        }
        // quotient adjacency is all-or-nothing
        for (std::size_t j = i + 1; j < cp.classes.size(); ++j) {
            bool q = cp.quotient.adjacent(static_cast<int>(i), static_cast<int>(j));
            for (int u : cp.classes[i])
                for (int v : cp.classes[j]) CHECK(L.graph.adjacent(u, v) == q);
        }
    }
}

TEST_CASE("strong product") {
    CHECK(strong_product(complete(2), complete(3)) == complete(6));
    CHECK(strong_product(SimpleGraph(1), path3()) == path3());
    CHECK(strong_product(complete(2), complete(2)) == complete(4));

    // closed-neighborhood degree identity on a modest pair
    SimpleGraph g = cycle(5), h = path3();
    SimpleGraph pr = strong_product(g, h);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < h.vertex_count(); ++v)
            CHECK(pr.degree(u * h.vertex_count() + v) ==
                  (g.degree(u) + 1) * (h.degree(v) + 1) - 1);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(cycle(6)).has_value());
    CHECK_FALSE(is_bipartite(complete(3)).has_value());
    // D(C_4 x C_9) is not bipartite
    auto L = difference_graph(make_group(SylowSpec(2, {2}), SylowSpec(3, {2})));
    CHECK_FALSE(is_bipartite(L.graph).has_value());
}

TEST_CASE("complete bipartite detection") {
    CHECK(is_complete_bipartite(complete_bipartite(3, 8)) == std::make_pair(3, 8));
    CHECK(is_complete_bipartite(path3()) == std::make_pair(1, 2));
    auto L = difference_graph(make_group(SylowSpec(2, {2}), SylowSpec(3, {1})));
    CHECK_FALSE(is_complete_bipartite(L.graph).has_value());
}

TEST_CASE("remove_isolated") {
    SimpleGraph edgeless(4);
    CHECK(remove_isolated(edgeless).first.vertex_count() == 0);

    SimpleGraph g(3);
    g.add_edge(0, 2);
    auto [h, keep] = remove_isolated(g);
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 1);
    CHECK(keep == std::vector<int>{0, 2});
}

TEST_CASE("shuffle") {
    auto L = difference_graph(make_group(SylowSpec(2, {2}), SylowSpec(3, {2})));
    auto [s1, p1] = shuffle(L.graph, 42);
    auto [s2, p2] = shuffle(L.graph, 42);
    CHECK(s1 == s2);
    CHECK(p1 == p2);
    auto [s3, p3] = shuffle(L.graph, 43);
    CHECK_FALSE(p1 == p3);
    // permutation is consistent: edge(u,v) iff edge(perm[u],perm[v])
    for (int u = 0; u < s1.vertex_count(); ++u)
        for (int v = u + 1; v < s1.vertex_count(); ++v)
            CHECK(s1.adjacent(u, v) ==
                  L.graph.adjacent(p1[static_cast<std::size_t>(u)],
                                   p1[static_cast<std::size_t>(v)]));
    // degree multiset preserved
    std::multiset<int> d0, d1;
    for (int v = 0; v < L.graph.vertex_count(); ++v) {
        d0.insert(L.graph.degree(v));
        d1.insert(s1.degree(v));
    }
    CHECK(d0 == d1);
}

TEST_CASE("isomorphism") {
    auto L = difference_graph(make_group(SylowSpec(2, {2, 1}), SylowSpec(3, {2})));
    for (std::uint64_t seed : {1, 2, 3}) {
        auto [s, perm] = shuffle(L.graph, seed);
        auto iso = are_isomorphic(L.graph, s);
        REQUIRE(iso.has_value());
        // verified edge-preserving bijection
        std::vector<char> hit(iso->size(), 0);
        for (int img : *iso) {
            CHECK(!hit[static_cast<std::size_t>(img)]);
            hit[static_cast<std::size_t>(img)] = 1;
        }
        for (int u = 0; u < L.graph.vertex_count(); ++u)
            for (int v = u + 1; v < L.graph.vertex_count(); ++v)
                CHECK(L.graph.adjacent(u, v) ==
                      s.adjacent((*iso)[static_cast<std::size_t>(u)],
                                 (*iso)[static_cast<std::size_t>(v)]));
    }

    CHECK_FALSE(are_isomorphic(path3(), complete(3)).has_value());

    // D(2:[2]x3:[2]) vs D(2:[1,1]x3:[2]): vertex counts differ
    auto a = difference_graph(make_group(SylowSpec(2, {2}), SylowSpec(3, {2})));
    auto b = difference_graph(make_group(SylowSpec(2, {1, 1}), SylowSpec(3, {2})));
    CHECK(a.graph.vertex_count() != b.graph.vertex_count());
    CHECK_FALSE(are_isomorphic(a.graph, b.graph).has_value());

    // same vertex and edge count, still distinguished: C_4 vs path-4
    SimpleGraph c4 = cycle(4);
    SimpleGraph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    p4.add_edge(0, 3);
    CHECK(are_isomorphic(c4, p4).has_value());  // both are 4-cycles
    p4.remove_edge(0, 3);
    p4.add_edge(0, 2);
    CHECK_FALSE(are_isomorphic(c4, p4).has_value());  // triangle with a tail
}

TEST_CASE("bipartite hull") {
    auto kb = complete_bipartite(3, 4);
    auto hull = bipartite_hull(kb, 0);
    REQUIRE(hull.has_value());
    CHECK(hull->first == std::vector<int>{0, 1, 2});
    CHECK(hull->second == std::vector<int>{3, 4, 5, 6});
    CHECK(is_maximal_complete_bipartite(kb, hull->first, hull->second));

    CHECK_FALSE(bipartite_hull(complete(3), 0).has_value());

    // D(C_4 x C_9), seed (a,e) with o(a)=2: X = three (x,e), Y = eight (e,y)
    GroupSpec spec = make_group(SylowSpec(2, {2}), SylowSpec(3, {2}));
    GroupCache c(spec);
    auto L = difference_graph(c);
    int seed_v = -1;
    for (std::size_t v = 0; v < L.element_index.size(); ++v) {
        std::int64_t x = L.element_index[v];
        if (c.b_of(x) == 0 && c.order_a(c.a_of(x)) == 2) seed_v = static_cast<int>(v);
    }
    REQUIRE(seed_v >= 0);
    auto dh = bipartite_hull(L.graph, seed_v);
    REQUIRE(dh.has_value());
    CHECK(dh->first.size() == 3);
    CHECK(dh->second.size() == 8);
    for (int v : dh->first) CHECK(c.b_of(L.element_index[static_cast<std::size_t>(v)]) == 0);
    for (int v : dh->second) CHECK(c.a_of(L.element_index[static_cast<std::size_t>(v)]) == 0);
    CHECK(is_maximal_complete_bipartite(L.graph, dh->first, dh->second));
}

TEST_CASE("is_maximal_complete_bipartite rejects extendable subgraphs") {
    auto k22 = complete_bipartite(2, 2);
    CHECK_FALSE(is_maximal_complete_bipartite(k22, {0}, {2}));
    CHECK(is_maximal_complete_bipartite(k22, {0, 1}, {2, 3}));
}

TEST_CASE("splitmix64 reference values") {
    // first outputs for seed 0 of the published splitmix64 constants
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
}
