#include <doctest.h>

#include <algorithm>
#include <set>

#include "gdiff/abelian.hpp"

using namespace gdiff;

TEST_CASE("sylow spec invariants") {
    SylowSpec s(2, {2, 1});
    CHECK(s.rank() == 2);
    CHECK(s.total() == 3);
    CHECK(s.top() == 2);
    CHECK(s.order() == 8);
    CHECK(s.exponent_of_group() == 4);
    CHECK_THROWS_AS(SylowSpec(4, {1}), group_error);
    CHECK_THROWS_AS(SylowSpec(2, {}), group_error);
    CHECK_THROWS_AS(SylowSpec(2, {1, 2}), group_error);
    CHECK_THROWS_AS(SylowSpec(2, {2, 0}), group_error);
}

TEST_CASE("make_group canonicalizes and rejects equal primes") {
    GroupSpec g = make_group(SylowSpec(3, {1}), SylowSpec(2, {2}));
    CHECK(g.sylow_a.prime == 2);
    CHECK(g.sylow_a.exponents == std::vector<int>{2});
    CHECK(g.sylow_b.prime == 3);
    CHECK(g.order() == 12);

    GroupSpec c6 = make_group(SylowSpec(2, {1}), SylowSpec(3, {1}));
    CHECK(c6.order() == 6);

    CHECK_THROWS_AS(make_group(SylowSpec(5, {1}), SylowSpec(5, {2})), equal_primes_error);
}

TEST_CASE("element order") {
    GroupSpec c8 = make_group(SylowSpec(2, {3}), SylowSpec(3, {1}));
    CHECK(order(c8, {{2}, {0}}) == 4);  // residue 2 in C_8
    CHECK(order(c8, {{0}, {0}}) == 1);

    GroupSpec g = make_group(SylowSpec(2, {2}), SylowSpec(3, {1}));
    // oracle: enumerate multiples until identity
    GroupElement x{{1}, {1}};
    ResidueSystem ra(g.sylow_a.moduli()), rb(g.sylow_b.moduli());
    std::vector<std::int64_t> ca{0}, cb{0};
    std::int64_t steps = 0;
    do {
        ca = ra.add(ca, x.coords_a);
        cb = rb.add(cb, x.coords_b);
        ++steps;
    } while (!(ca == std::vector<std::int64_t>{0} && cb == std::vector<std::int64_t>{0}));
    CHECK(steps == 12);
    CHECK(order(g, x) == 12);
}

TEST_CASE("cyclic membership and strict power") {
    GroupSpec c4 = make_group(SylowSpec(2, {2}), SylowSpec(3, {1}));
    // within the C_4 coordinate
    CHECK(is_in_cyclic(c4, {{1}, {0}}, {{2}, {0}}));
    CHECK(strict_power(c4, {{1}, {0}}, {{2}, {0}}));
    CHECK_FALSE(strict_power(c4, {{1}, {0}}, {{1}, {0}}));

    GroupSpec k = make_group(SylowSpec(2, {1, 1}), SylowSpec(3, {1}));
    CHECK_FALSE(is_in_cyclic(k, {{1, 0}, {0}}, {{0, 1}, {0}}));
    CHECK(is_in_cyclic(k, {{1, 0}, {0}}, {{0, 0}, {0}}));  // identity in every subgroup

    GroupSpec c3 = make_group(SylowSpec(2, {1}), SylowSpec(3, {1}));
    CHECK_FALSE(strict_power(c3, {{0}, {1}}, {{0}, {2}}));  // each generates the other
}

TEST_CASE("generates_cyclic") {
    GroupSpec k = make_group(SylowSpec(2, {1, 1}), SylowSpec(3, {1}));
    CHECK_FALSE(generates_cyclic(k, {{1, 0}, {0}}, {{0, 1}, {0}}));
    CHECK(generates_cyclic(k, {{1, 0}, {0}}, {{0, 0}, {0}}));

    GroupSpec c6 = make_group(SylowSpec(2, {1}), SylowSpec(3, {1}));
    CHECK(generates_cyclic(c6, {{1}, {0}}, {{0}, {1}}));  // closure has 6 = lcm(2,3) elements
}

TEST_CASE("strict_power is irreflexive and transitive at small orders") {
    for (const auto& spec : enumerate_specs(200)) {
        ResidueSystem ra(spec.sylow_a.moduli()), rb(spec.sylow_b.moduli());
        std::vector<GroupElement> elems;
        for (std::int64_t a = 0; a < ra.size; ++a)
            for (std::int64_t b = 0; b < rb.size; ++b)
                elems.push_back({ra.coords(a), rb.coords(b)});
        if (elems.size() > 40) continue;  // keep the cubic scan tiny
        std::vector<std::vector<char>> sp(elems.size(), std::vector<char>(elems.size()));
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = 0; j < elems.size(); ++j)
                sp[i][j] = strict_power(spec, elems[i], elems[j]);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            CHECK_FALSE(sp[i][i]);
            for (std::size_t j = 0; j < elems.size(); ++j)
                for (std::size_t l = 0; l < elems.size(); ++l)
                    if (sp[i][j] && sp[j][l]) CHECK(sp[i][l]);
        }
    }
}

TEST_CASE("element order divides group order") {
    for (const auto& spec : enumerate_specs(500)) {
        ResidueSystem ra(spec.sylow_a.moduli()), rb(spec.sylow_b.moduli());
        for (std::int64_t a = 0; a < ra.size; ++a)
            for (std::int64_t b = 0; b < rb.size; ++b) {
                std::int64_t o = ra.order_of(ra.coords(a)) * rb.order_of(rb.coords(b));
                CHECK(spec.order() % o == 0);
            }
    }
}

TEST_CASE("maximal cyclic generators") {
    auto as_set = [](const std::vector<std::vector<std::int64_t>>& v) {
        return std::set<std::vector<std::int64_t>>(v.begin(), v.end());
    };
    CHECK(as_set(maximal_cyclic_generators(SylowSpec(2, {2}))) ==
          std::set<std::vector<std::int64_t>>{{1}, {3}});
    CHECK(as_set(maximal_cyclic_generators(SylowSpec(2, {1, 1}))) ==
          std::set<std::vector<std::int64_t>>{{1, 0}, {0, 1}, {1, 1}});
    // C_4 x C_2: note the order-2 maximal generators (0,1) and (2,1) --
    // only (2,0) of the order-2 elements lies inside a larger cyclic
    // subgroup
    CHECK(as_set(maximal_cyclic_generators(SylowSpec(2, {2, 1}))) ==
          std::set<std::vector<std::int64_t>>{
              {1, 0}, {3, 0}, {1, 1}, {3, 1}, {0, 1}, {2, 1}});
    // brute-force oracle: x maximal iff no y has <y> strictly containing <x>
    ResidueSystem rs(SylowSpec(2, {2, 1}).moduli());
    auto in_cyc = sylow_membership(SylowSpec(2, {2, 1}));
    for (const auto& gen : maximal_cyclic_generators(SylowSpec(2, {2, 1}))) {
        std::int64_t x = rs.index(gen);
        for (std::int64_t z = 0; z < rs.size; ++z)
            CHECK_FALSE((in_cyc[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)] &&
                         !in_cyc[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)]));
    }
}

TEST_CASE("order_counts") {
    CHECK(order_counts(SylowSpec(2, {2})) ==
          std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 1}, {4, 2}});
    CHECK(order_counts(SylowSpec(2, {1, 1})) ==
          std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 3}});
    CHECK(order_counts(SylowSpec(2, {2, 1})) ==
          std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 3}, {4, 4}});
    // product convolution vs direct element scan
    GroupSpec g = make_group(SylowSpec(2, {2, 1}), SylowSpec(3, {2}));
    ResidueSystem ra(g.sylow_a.moduli()), rb(g.sylow_b.moduli());
    std::map<std::int64_t, std::int64_t> direct;
    for (std::int64_t a = 0; a < ra.size; ++a)
        for (std::int64_t b = 0; b < rb.size; ++b)
            ++direct[ra.order_of(ra.coords(a)) * rb.order_of(rb.coords(b))];
    CHECK(order_counts(g) == direct);
}

TEST_CASE("partition_from_order_counts") {
    CHECK(partition_from_order_counts(2, {{1, 1}, {2, 3}}) == std::vector<int>{1, 1});
    // oracle: unique partition whose forward counts match
    auto oracle = [](std::int64_t p, const std::map<std::int64_t, std::int64_t>& counts,
                     int n) {
        std::vector<std::vector<int>> hits;
        for (const auto& part : partitions_of(n))
            if (order_counts(SylowSpec(p, part)) == counts) hits.push_back(part);
        REQUIRE(hits.size() == 1);
        return hits.front();
    };
    std::map<std::int64_t, std::int64_t> c4{{1, 1}, {2, 1}, {4, 2}};
    CHECK(partition_from_order_counts(2, c4) == oracle(2, c4, 2));
    std::map<std::int64_t, std::int64_t> c42{{1, 1}, {2, 3}, {4, 4}};
    CHECK(partition_from_order_counts(2, c42) == oracle(2, c42, 3));

    CHECK_THROWS_AS(partition_from_order_counts(2, {{1, 1}, {2, 4}}), not_realizable_error);
    CHECK_THROWS_AS(partition_from_order_counts(2, {{1, 1}, {3, 2}}), not_realizable_error);
    CHECK_THROWS_AS(partition_from_order_counts(2, {{2, 3}}), not_realizable_error);
}

TEST_CASE("enumerate_specs") {
    auto only_c6 = enumerate_specs(6);
    REQUIRE(only_c6.size() == 1);
    CHECK(only_c6[0] == make_group(SylowSpec(2, {1}), SylowSpec(3, {1})));

    auto upto10 = enumerate_specs(10);
    REQUIRE(upto10.size() == 2);
    CHECK(upto10[0] == make_group(SylowSpec(2, {1}), SylowSpec(3, {1})));
    CHECK(upto10[1] == make_group(SylowSpec(2, {1}), SylowSpec(5, {1})));

    auto upto12 = enumerate_specs(12);
    auto has = [&](const GroupSpec& g) {
        return std::find(upto12.begin(), upto12.end(), g) != upto12.end();
    };
    CHECK(has(make_group(SylowSpec(2, {2}), SylowSpec(3, {1}))));
    CHECK(has(make_group(SylowSpec(2, {1, 1}), SylowSpec(3, {1}))));

    // no duplicates, deterministic, sorted by order
    auto again = enumerate_specs(120);
    CHECK(std::adjacent_find(again.begin(), again.end()) == again.end());
    CHECK(std::is_sorted(again.begin(), again.end(),
                         [](const GroupSpec& a, const GroupSpec& b) {
                             return a.order() < b.order();
                         }));
    CHECK(again == enumerate_specs(120));
}

TEST_CASE("list_cyclic_subgroups") {
    auto subs222 = list_cyclic_subgroups(SylowSpec(2, {1, 1, 1}));
    std::int64_t order2 = 0;
    for (const auto& s : subs222)
        if (s.size() == 2) ++order2;
    CHECK(order2 == 7);  // (2^3 - 1)/(2 - 1)

    CHECK(list_cyclic_subgroups(SylowSpec(2, {2})).size() == 3);

    // a fixed non-maximal <x> of order 3 lies in p^{k-1} = 3 cyclic
    // subgroups of order 9 inside 3:[2,1]
    auto subs = list_cyclic_subgroups(SylowSpec(3, {2, 1}));
    std::vector<std::int64_t> target;
    for (const auto& s : subs) {
        if (s.size() != 3) continue;
        for (const auto& big : subs)
            if (big.size() > 3 && std::includes(big.begin(), big.end(), s.begin(), s.end())) {
                target = s;
                break;
            }
        if (!target.empty()) break;
    }
    REQUIRE(!target.empty());
    std::int64_t covers = 0;
    for (const auto& s : subs)
        if (s.size() == 9 && std::includes(s.begin(), s.end(), target.begin(), target.end()))
            ++covers;
    CHECK(covers == 3);
}
