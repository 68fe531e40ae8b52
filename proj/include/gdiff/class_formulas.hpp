// Classification of neighborhood classes of a labeled difference graph
// (m-classes, l-classes, u-classes, max-submax classes) and the closed-form
// size/degree table that the reconstruction relies on.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "graph.hpp"
#include "group_graphs.hpp"

namespace gdiff {

enum class ClassTag {
    MClass,        // both coordinates non-identity, neither maximal
    LClassA,       // classes [(a,e)]
    LClassB,       // classes [(e,b)]
    UClass,        // exactly one coordinate a maximal-cyclic generator
    PQMaxSubmax,   // u-class: max element in P, submax element in Q
    QPMaxSubmax,   // u-class: max element in Q, submax element in P
};

inline const char* tag_name(ClassTag t) {
    switch (t) {
        case ClassTag::MClass: return "m-class";
        case ClassTag::LClassA: return "l-class-A";
        case ClassTag::LClassB: return "l-class-B";
        case ClassTag::UClass: return "u-class";
        case ClassTag::PQMaxSubmax: return "PQ-max-submax";
        case ClassTag::QPMaxSubmax: return "QP-max-submax";
    }
    return "?";
}

struct ClassKind {
    ClassTag tag;
    std::int64_t order_a = 1;  // order of the P-coordinate of any member
    std::int64_t order_b = 1;  // order of the Q-coordinate
    bool operator==(const ClassKind&) const = default;
};

// The eight structural parameters of a two-prime abelian group.
struct Params {
    std::int64_t p, q;
    int n, m, k, l, r1, t1;
    bool operator==(const Params&) const = default;
};

inline Params params_of(const GroupSpec& g) {
    return {g.sylow_a.prime, g.sylow_b.prime, g.sylow_a.total(), g.sylow_b.total(),
            g.sylow_a.rank(), g.sylow_b.rank(), g.sylow_a.top(), g.sylow_b.top()};
}

// Kind of one neighborhood class, read off any member's label; all members
// must agree, anything else is an internal failure.
inline ClassKind classify_class(const LabeledDiffGraph& L, const GroupCache& c,
                                const std::vector<int>& cls) {
    if (cls.empty()) throw internal_mismatch_error("classify_class: empty class");
    Params par = params_of(L.spec);
    auto describe = [&](int v) {
        std::int64_t x = L.element_index[static_cast<std::size_t>(v)];
        std::int64_t ia = c.a_of(x), ib = c.b_of(x);
        ClassKind kind{ClassTag::MClass, c.order_a(ia), c.order_b(ib)};
        bool amax = c.maximal_a(ia), bmax = c.maximal_b(ib);
        if (ia == 0 && ib == 0) throw internal_mismatch_error("identity is not a vertex");
        if (ia == 0) {
            kind.tag = ClassTag::LClassB;
        } else if (ib == 0) {
            kind.tag = ClassTag::LClassA;
        } else if (amax && bmax) {
            throw internal_mismatch_error("M(P) x M(Q) element is not a vertex");
        } else if (amax || bmax) {
            kind.tag = ClassTag::UClass;
            if (amax && par.r1 >= 2 && par.t1 >= 2 && kind.order_a == ipow(par.p, par.r1) &&
                kind.order_b == ipow(par.q, par.t1 - 1))
                kind.tag = ClassTag::PQMaxSubmax;
            if (bmax && par.r1 >= 2 && par.t1 >= 2 && kind.order_b == ipow(par.q, par.t1) &&
                kind.order_a == ipow(par.p, par.r1 - 1))
                kind.tag = ClassTag::QPMaxSubmax;
        }
        return kind;
    };
    ClassKind kind = describe(cls.front());
    for (int v : cls)
        if (!(describe(v) == kind))
            throw internal_mismatch_error("class members disagree on kind");
    return kind;
}

// Closed-form class cardinality where one exists; generic u-classes have
// none (their size depends on more than the coordinate orders).
inline std::optional<std::int64_t> predicted_size(const ClassKind& kind, const Params& par) {
    auto phi = [](std::int64_t prime_power, std::int64_t prime) {
        return prime_power - prime_power / prime;
    };
    switch (kind.tag) {
        case ClassTag::MClass:
            return phi(kind.order_a, par.p) * phi(kind.order_b, par.q);
        case ClassTag::LClassB: {
            if (kind.order_b == par.q) return ipow(par.q, par.l) - 1;
            return ipow(par.q, par.l - 1) * phi(kind.order_b, par.q);
        }
        case ClassTag::LClassA: {
            if (kind.order_a == par.p) return ipow(par.p, par.k) - 1;
            return ipow(par.p, par.k - 1) * phi(kind.order_a, par.p);
        }
        case ClassTag::PQMaxSubmax:
            return ipow(par.p, par.k - 1) * phi(ipow(par.p, par.r1), par.p) *
                   phi(ipow(par.q, par.t1 - 1), par.q);
        case ClassTag::QPMaxSubmax:
            return ipow(par.q, par.l - 1) * phi(ipow(par.q, par.t1), par.q) *
                   phi(ipow(par.p, par.r1 - 1), par.p);
        case ClassTag::UClass:
            return std::nullopt;  // no closed form
    }
    return std::nullopt;
}

// Degrees used as redundant cross-checks in the non-bipartite regime.
struct DegreeTable {
    std::int64_t top_l_b;         // vertices (e,d), d maximal of order q^t1
    std::int64_t top_l_a;         // vertices (d,e), d maximal of order p^r1
    std::int64_t pq_max_submax;   // members of a PQ-class
    std::int64_t qp_max_submax;   // members of a QP-class
};

inline DegreeTable predicted_degrees(const Params& par) {
    if (par.r1 < 2 || par.t1 < 2)
        throw group_error("predicted_degrees: non-bipartite regime requires r1, t1 >= 2");
    std::int64_t qt = ipow(par.q, par.t1), pr = ipow(par.p, par.r1);
    DegreeTable t;
    t.top_l_b = (ipow(par.p, par.n) - 1) * (qt / par.q);
    t.top_l_a = (ipow(par.q, par.m) - 1) * (pr / par.p);
    t.pq_max_submax = (pr / par.p) * ipow(par.q, par.l - 1) * (qt - qt / par.q);
    t.qp_max_submax = (qt / par.q) * ipow(par.p, par.k - 1) * (pr - pr / par.p);
    return t;
}

// The set-builder of the applicable lemma, evaluated by brute force over
// labels; must equal the actual neighborhood class of v.
inline std::vector<int> expected_class_members(const LabeledDiffGraph& L, const GroupCache& c,
                                               int v) {
    std::int64_t x = L.element_index[static_cast<std::size_t>(v)];
    std::int64_t ia = c.a_of(x), ib = c.b_of(x);
    bool amax = c.maximal_a(ia), bmax = c.maximal_b(ib);
    std::int64_t oa = c.order_a(ia), ob = c.order_b(ib);
    std::int64_t p = L.spec.sylow_a.prime, q = L.spec.sylow_b.prime;

    auto same_cyclic_a = [&](std::int64_t j) {
        return c.in_cyclic_a(ia, j) && c.in_cyclic_a(j, ia);
    };
    auto same_cyclic_b = [&](std::int64_t j) {
        return c.in_cyclic_b(ib, j) && c.in_cyclic_b(j, ib);
    };
    // |<b> n <y>| >= q^{u-1}, i.e. the two cyclic subgroups share the
    // maximal proper subgroup of <b>
    auto near_b = [&](std::int64_t j) {
        return c.order_b(j) == ob &&
               c.membership_b().row_intersection_count(ib, j) >= ob / q;
    };
    auto near_a = [&](std::int64_t j) {
        return c.order_a(j) == oa &&
               c.membership_a().row_intersection_count(ia, j) >= oa / p;
    };

    auto matches = [&](std::int64_t ja, std::int64_t jb) {
        if (ia == 0) return ja == 0 && near_b(jb);
        if (ib == 0) return jb == 0 && near_a(ja);
        if (!amax && !bmax) return same_cyclic_a(ja) && same_cyclic_b(jb);
        if (bmax) return same_cyclic_a(ja) && near_b(jb) && c.maximal_b(jb);
        return same_cyclic_b(jb) && near_a(ja) && c.maximal_a(ja);
    };

    std::vector<int> out;
    for (std::size_t w = 0; w < L.element_index.size(); ++w) {
        std::int64_t y = L.element_index[w];
        if (matches(c.a_of(y), c.b_of(y))) out.push_back(static_cast<int>(w));
    }
    return out;
}

// Classes inside X whose members see exactly Y, and vice versa (the
// SDK property within a complete bipartite subgraph).
inline std::pair<std::vector<int>, std::vector<int>> sdk_classes(const SimpleGraph& g,
                                                                 const ClassPartition& cp,
                                                                 const std::vector<int>& X,
                                                                 const std::vector<int>& Y) {
    std::vector<char> inX(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> inY(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : X) inX[static_cast<std::size_t>(v)] = 1;
    for (int v : Y) inY[static_cast<std::size_t>(v)] = 1;
    auto sees_exactly = [&](int v, const std::vector<int>& part,
                            const std::vector<char>& inpart) {
        auto nb = g.neighbors(v);
        if (nb.size() != part.size()) return false;
        for (int u : nb)
            if (!inpart[static_cast<std::size_t>(u)]) return false;
        return true;
    };
    std::pair<std::vector<int>, std::vector<int>> out;
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        const auto& cls = cp.classes[i];
        bool allX = true, allY = true;
        for (int v : cls) {
            allX = allX && inX[static_cast<std::size_t>(v)];
            allY = allY && inY[static_cast<std::size_t>(v)];
        }
        if (allX && sees_exactly(cls.front(), Y, inY)) out.first.push_back(static_cast<int>(i));
        if (allY && sees_exactly(cls.front(), X, inX)) out.second.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace gdiff
