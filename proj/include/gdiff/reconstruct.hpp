// Recovery of a two-prime abelian group spec from an unlabeled difference
// graph: complete-bipartite and bipartite special cases, and the general
// branch via max-submax classes, H_e location and order sequences.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "class_formulas.hpp"
#include "graph.hpp"
#include "group_graphs.hpp"
#include "isomorphism.hpp"

namespace gdiff {

struct not_a_difference_graph : group_error {
    using group_error::group_error;
};

struct empty_input_error : group_error {
    using group_error::group_error;
};

enum class Branch { CompleteBipartite, Bipartite, General };

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::CompleteBipartite: return "complete-bipartite";
        case Branch::Bipartite: return "bipartite";
        case Branch::General: return "general";
    }
    return "?";
}

struct ReconstructionReport {
    Branch branch;
    std::optional<Params> params;                 // general branch only
    std::map<std::int64_t, std::int64_t> counts_a;  // order counts, smaller prime
    std::map<std::int64_t, std::int64_t> counts_b;
    GroupSpec spec;
    std::vector<std::string> trace;
    bool validated = false;
};

namespace detail {

inline void fail(const std::string& why) { throw not_a_difference_graph(why); }

inline std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
    if (b == 0 || a % b != 0) fail(std::string(what) + ": division is not exact");
    return a / b;
}

// integer root: v == base^(exp) for some prime base, given exp
inline std::int64_t prime_root(std::int64_t v, int exp, const char* what) {
    if (exp <= 0 || v < 2) fail(std::string(what) + ": no prime root");
    std::int64_t lo = 2;
    while (ipow(lo, exp) < v) ++lo;
    if (ipow(lo, exp) != v || !is_prime(lo)) fail(std::string(what) + ": no prime root");
    return lo;
}

}  // namespace detail

// Lemma-driven special case: a complete bipartite difference graph comes
// from a product of two elementary abelian groups.
inline GroupSpec reconstruct_complete_bipartite(std::int64_t s, std::int64_t t) {
    PrimePower a = prime_power_of(s + 1);
    PrimePower b = prime_power_of(t + 1);
    if (a.prime == 0 || b.prime == 0)
        detail::fail("complete bipartite: part size + 1 is not a prime power");
    if (a.prime == b.prime) detail::fail("complete bipartite: equal primes");
    return GroupSpec(SylowSpec(a.prime, std::vector<int>(static_cast<std::size_t>(a.exp), 1)),
                     SylowSpec(b.prime, std::vector<int>(static_cast<std::size_t>(b.exp), 1)));
}

// Bipartite, non-complete case: one Sylow part is elementary abelian.
// The class of size p^k - 1 whose members see the whole opposite part
// pins down the elementary side; the opposite part's classes spell out
// the other side's order sequence.
inline ReconstructionReport reconstruct_bipartite(const SimpleGraph& g,
                                                  const std::vector<int>& coloring) {
    ClassPartition cp = neighborhood_classes(g);
    std::vector<std::string> trace;

    // every class must sit inside one partite set
    std::vector<int> side(cp.classes.size(), -1);
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        side[i] = coloring[static_cast<std::size_t>(cp.classes[i].front())];
        for (int v : cp.classes[i])
            if (coloring[static_cast<std::size_t>(v)] != side[i])
                detail::fail("bipartite: class straddles the bipartition");
    }
    std::vector<std::vector<int>> part_verts(2);
    for (int v = 0; v < g.vertex_count(); ++v)
        part_verts[static_cast<std::size_t>(coloring[static_cast<std::size_t>(v)])].push_back(v);
    if (part_verts[0].empty() || part_verts[1].empty())
        detail::fail("bipartite: a partite set is empty");

    // minimum-size classes per part; C* is the unique one among them whose
    // members are adjacent to every vertex of the opposite part
    std::vector<std::int64_t> minsize(2, -1);
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        auto s = static_cast<std::size_t>(side[i]);
        if (minsize[s] < 0 || cp.class_size[i] < minsize[s]) minsize[s] = cp.class_size[i];
    }
    auto sees_all = [&](int cls, const std::vector<int>& opposite) {
        int rep = cp.classes[static_cast<std::size_t>(cls)].front();
        for (int v : opposite)
            if (!g.adjacent(rep, v)) return false;
        return true;
    };
    int cstar = -1;
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        if (cp.class_size[i] != minsize[static_cast<std::size_t>(side[i])]) continue;
        if (!sees_all(static_cast<int>(i), part_verts[static_cast<std::size_t>(1 - side[i])]))
            continue;
        if (cstar != -1) detail::fail("bipartite: C* is not unique");
        cstar = static_cast<int>(i);
    }
    if (cstar == -1) detail::fail("bipartite: no dominating minimum class");

    PrimePower pk = prime_power_of(cp.class_size[static_cast<std::size_t>(cstar)] + 1);
    if (pk.prime == 0) detail::fail("bipartite: |C*| + 1 is not a prime power");
    std::int64_t p = pk.prime;
    int k = pk.exp;
    {
        std::ostringstream os;
        os << "C* = class of size " << cp.class_size[static_cast<std::size_t>(cstar)]
           << " -> elementary part " << p << "^" << k;
        trace.push_back(os.str());
    }

    // the opposite part is K_e; its unique class seeing exactly C* has
    // q^l - 1 members
    int ke_side = 1 - side[static_cast<std::size_t>(cstar)];
    std::vector<char> in_cstar(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : cp.classes[static_cast<std::size_t>(cstar)]) in_cstar[static_cast<std::size_t>(v)] = 1;
    int dstar = -1;
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        if (side[i] != ke_side) continue;
        int rep = cp.classes[i].front();
        auto nb = g.neighbors(rep);
        if (nb.size() != cp.classes[static_cast<std::size_t>(cstar)].size()) continue;
        bool exact = true;
        for (int v : nb) exact = exact && in_cstar[static_cast<std::size_t>(v)];
        if (!exact) continue;
        if (dstar != -1) detail::fail("bipartite: order-q class is not unique");
        dstar = static_cast<int>(i);
    }
    if (dstar == -1) detail::fail("bipartite: no class sees exactly C*");
    PrimePower ql = prime_power_of(cp.class_size[static_cast<std::size_t>(dstar)] + 1);
    if (ql.prime == 0) detail::fail("bipartite: |D*| + 1 is not a prime power");
    std::int64_t q = ql.prime;
    int l = ql.exp;
    if (q == p) detail::fail("bipartite: equal primes");
    {
        std::ostringstream os;
        os << "order-q class of size " << cp.class_size[static_cast<std::size_t>(dstar)]
           << " -> q = " << q << ", l = " << l;
        trace.push_back(os.str());
    }

    // classes of K_e of size q^{l-1}(q^u - q^{u-1}) count elements of
    // order q^u
    std::map<std::int64_t, std::int64_t> counts_q{{1, 1}};
    std::int64_t base = ipow(q, l - 1) * (q - 1);
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        if (side[i] != ke_side) continue;
        if (static_cast<int>(i) == dstar) {
            counts_q[q] += cp.class_size[i];
            continue;
        }
        std::int64_t ratio = detail::exact_div(cp.class_size[i], base, "bipartite class size");
        int um1 = ilog_exact(q, ratio);
        if (um1 < 1) detail::fail("bipartite: class size fits no order template");
        counts_q[ipow(q, um1 + 1)] += cp.class_size[i];
    }
    // cross-check the C* side: every other class there has size
    // (p^k - 1)(q^u - q^{u-1})
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        if (side[i] == ke_side || static_cast<int>(i) == cstar) continue;
        std::int64_t ratio =
            detail::exact_div(cp.class_size[i], ipow(p, k) - 1, "bipartite m-side class size");
        std::int64_t rem = detail::exact_div(ratio, q - 1, "bipartite m-side class size");
        if (ilog_exact(q, rem * q) < 1) detail::fail("bipartite: m-side class size mismatch");
    }

    std::vector<int> exps_q;
    try {
        exps_q = partition_from_order_counts(q, counts_q);
    } catch (const not_realizable_error& e) {
        detail::fail(std::string("bipartite: ") + e.what());
    }
    GroupSpec spec(SylowSpec(p, std::vector<int>(static_cast<std::size_t>(k), 1)),
                   SylowSpec(q, exps_q));
    std::map<std::int64_t, std::int64_t> counts_p = order_counts(
        p == spec.sylow_a.prime ? spec.sylow_a : spec.sylow_b);
    ReconstructionReport rep{Branch::Bipartite,
                             std::nullopt,
                             spec.sylow_a.prime == p ? counts_p : counts_q,
                             spec.sylow_a.prime == p ? counts_q : counts_p,
                             spec,
                             std::move(trace),
                             false};
    return rep;
}

// General (non-bipartite) branch, step one: the eight parameters.
inline Params extract_parameters(const ClassPartition& cp) {
    if (cp.classes.empty()) detail::fail("no classes");
    auto min_degree_among = [&](const std::vector<int>& cands) {
        int best = cands.front();
        for (int c : cands)
            if (cp.class_degree[static_cast<std::size_t>(c)] <
                cp.class_degree[static_cast<std::size_t>(best)])
                best = c;
        return best;
    };

    // S1: among maximum-size classes, minimum member degree (an l-class can
    // tie a max-submax class in size but always has strictly more neighbors)
    std::int64_t maxsz = *std::max_element(cp.class_size.begin(), cp.class_size.end());
    std::vector<int> cands;
    for (std::size_t i = 0; i < cp.classes.size(); ++i)
        if (cp.class_size[i] == maxsz) cands.push_back(static_cast<int>(i));
    int s1 = min_degree_among(cands);

    auto neighbor_classes = [&](int cls) {
        std::vector<int> out;
        for (int j = 0; j < cp.quotient.vertex_count(); ++j)
            if (cp.quotient.adjacent(cls, j)) out.push_back(j);
        return out;
    };

    // N1: one neighbor class per subgroup of the max element's chain,
    // so |N1| = r1 and the sizes sum to B * p^{r1-1}
    std::vector<int> n1 = neighbor_classes(s1);
    int r1 = static_cast<int>(n1.size());
    if (r1 < 2) detail::fail("top class has too few neighbor classes");
    std::int64_t B = cp.class_size[static_cast<std::size_t>(n1.front())], sum1 = 0;
    for (int c : n1) {
        B = std::min(B, cp.class_size[static_cast<std::size_t>(c)]);
        sum1 += cp.class_size[static_cast<std::size_t>(c)];
    }
    std::int64_t ratio1 = detail::exact_div(sum1, B, "neighbor size sum");
    std::int64_t p = detail::prime_root(ratio1, r1 - 1, "p");

    // S2: the max-submax class on the other side, found inside N1
    std::int64_t maxsz1 = 0;
    for (int c : n1) maxsz1 = std::max(maxsz1, cp.class_size[static_cast<std::size_t>(c)]);
    std::vector<int> cands2;
    for (int c : n1)
        if (cp.class_size[static_cast<std::size_t>(c)] == maxsz1) cands2.push_back(c);
    int s2 = min_degree_among(cands2);

    std::vector<int> n2 = neighbor_classes(s2);
    int t1 = static_cast<int>(n2.size());
    if (t1 < 2) detail::fail("second class has too few neighbor classes");
    std::int64_t B2 = cp.class_size[static_cast<std::size_t>(n2.front())], sum2 = 0;
    for (int c : n2) {
        B2 = std::min(B2, cp.class_size[static_cast<std::size_t>(c)]);
        sum2 += cp.class_size[static_cast<std::size_t>(c)];
    }
    std::int64_t ratio2 = detail::exact_div(sum2, B2, "neighbor size sum");
    std::int64_t q = detail::prime_root(ratio2, t1 - 1, "q");
    if (p == q) detail::fail("equal primes");

    // ranks from the two minimum neighbor sizes
    std::int64_t qt = ipow(q, t1), pr = ipow(p, r1);
    int l = ilog_exact(q, detail::exact_div(B, qt - qt / q, "B") * q);
    int k = ilog_exact(p, detail::exact_div(B2, pr - pr / p, "B'") * p);
    if (l < 1 || k < 1) detail::fail("rank is not a power");

    // the l-class among the size-B classes of N1 has the maximum member
    // degree (p = 2 tie-break); its degree gives n, symmetrically m
    auto max_degree_of_size = [&](const std::vector<int>& set, std::int64_t size) {
        int best = -1;
        for (int c : set)
            if (cp.class_size[static_cast<std::size_t>(c)] == size &&
                (best == -1 || cp.class_degree[static_cast<std::size_t>(c)] >
                                   cp.class_degree[static_cast<std::size_t>(best)]))
                best = c;
        if (best == -1) detail::fail("no minimum-size neighbor class");
        return best;
    };
    int lc1 = max_degree_of_size(n1, B);
    int lc2 = max_degree_of_size(n2, B2);
    int n = ilog_exact(
        p, detail::exact_div(cp.class_degree[static_cast<std::size_t>(lc1)], qt / q, "degree") + 1);
    int m = ilog_exact(
        q, detail::exact_div(cp.class_degree[static_cast<std::size_t>(lc2)], pr / p, "degree") + 1);
    if (n < r1 || m < t1) detail::fail("total exponent below top exponent");

    // cross-checks against the max-submax cardinality formulas
    std::int64_t s1_pred = ipow(p, k - 1) * (pr - pr / p) * (qt / q - qt / (q * q));
    std::int64_t s2_pred = ipow(q, l - 1) * (qt - qt / q) * (pr / p - pr / (p * p));
    if (cp.class_size[static_cast<std::size_t>(s1)] != s1_pred) detail::fail("|S1| mismatch");
    if (cp.class_size[static_cast<std::size_t>(s2)] != s2_pred) detail::fail("|S2| mismatch");
    if (std::find(n2.begin(), n2.end(), s1) == n2.end()) detail::fail("S1 not adjacent to S2");
    if (n > r1 * k || m > t1 * l) detail::fail("parameters inconsistent");

    // normalize: report the smaller prime as p
    if (p < q) return Params{p, q, n, m, k, l, r1, t1};
    return Params{q, p, m, n, l, k, t1, r1};
}

// Locate H_e: a class of size q^l - 1 whose hull is a maximal complete
// bipartite subgraph with an SDK class of size p^k - 1 on the other side.
// Returns (classes of X_e, classes of Y_e) where X_e is the q-side.
inline std::pair<std::vector<int>, std::vector<int>> locate_he(const SimpleGraph& g,
                                                               const ClassPartition& cp,
                                                               const Params& par) {
    std::int64_t qside_size = ipow(par.q, par.l) - 1;
    std::int64_t pside_size = ipow(par.p, par.k) - 1;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> found;
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        if (cp.class_size[i] != qside_size) continue;
        auto hull = bipartite_hull(g, cp.classes[i].front());
        if (!hull) continue;
        auto& [X, Y] = *hull;
        if (!is_maximal_complete_bipartite(g, X, Y)) continue;
        auto sdk = sdk_classes(g, cp, X, Y);
        bool pside = false;
        for (int c : sdk.second)
            if (cp.class_size[static_cast<std::size_t>(c)] == pside_size) pside = true;
        if (!pside) continue;
        if (found && (found->first != X || found->second != Y))
            detail::fail("H_e candidates disagree");
        found = std::make_pair(X, Y);
    }
    if (!found) detail::fail("H_e not found");

    // both sides must split into whole classes
    auto classes_of_side = [&](const std::vector<int>& side) {
        std::vector<char> inside(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int v : side) inside[static_cast<std::size_t>(v)] = 1;
        std::vector<int> out;
        for (std::size_t i = 0; i < cp.classes.size(); ++i) {
            bool any = false, all = true;
            for (int v : cp.classes[i]) {
                bool in = inside[static_cast<std::size_t>(v)];
                any = any || in;
                all = all && in;
            }
            if (any && !all) detail::fail("H_e side splits a class");
            if (all) out.push_back(static_cast<int>(i));
        }
        return out;
    };
    auto xe = classes_of_side(found->first);
    auto ye = classes_of_side(found->second);
    std::int64_t xtotal = 0, ytotal = 0;
    for (int c : xe) xtotal += cp.class_size[static_cast<std::size_t>(c)];
    for (int c : ye) ytotal += cp.class_size[static_cast<std::size_t>(c)];
    if (xtotal != ipow(par.q, par.m) - 1 || ytotal != ipow(par.p, par.n) - 1)
        detail::fail("H_e side totals mismatch");
    return {xe, ye};
}

// Read the order counts of one Sylow part off the classes of one H_e side.
inline std::map<std::int64_t, std::int64_t> order_counts_from_side(
    const ClassPartition& cp, const std::vector<int>& side_classes, std::int64_t prime,
    int rank) {
    std::map<std::int64_t, std::int64_t> counts{{1, 1}};
    std::int64_t base = ipow(prime, rank - 1) * (prime - 1);
    std::int64_t small = ipow(prime, rank) - 1;
    for (int c : side_classes) {
        std::int64_t s = cp.class_size[static_cast<std::size_t>(c)];
        if (s == small) {
            counts[prime] += s;
            continue;
        }
        if (s % base != 0) detail::fail("side class size fits no order template");
        int um1 = ilog_exact(prime, s / base);
        if (um1 < 1) detail::fail("side class size fits no order template");
        counts[ipow(prime, um1 + 1)] += s;
    }
    return counts;
}

// Full pipeline: dispatch on shape, recover the spec, optionally rebuild
// and verify isomorphism with the input.
inline ReconstructionReport reconstruct(const SimpleGraph& g, bool validate = true) {
    if (g.vertex_count() == 0) throw empty_input_error("empty graph");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) detail::fail("input has isolated vertices");

    auto coloring = is_bipartite(g);
    std::optional<ReconstructionReport> rep;
    if (coloring) {
        if (auto kst = is_complete_bipartite(g)) {
            GroupSpec spec = reconstruct_complete_bipartite(kst->first, kst->second);
            std::ostringstream os;
            os << "complete bipartite K_{" << kst->first << "," << kst->second << "}";
            rep = ReconstructionReport{Branch::CompleteBipartite,
                                       std::nullopt,
                                       order_counts(spec.sylow_a),
                                       order_counts(spec.sylow_b),
                                       spec,
                                       {os.str()},
                                       false};
        } else {
            rep = reconstruct_bipartite(g, *coloring);
        }
    } else {
        ClassPartition cp = neighborhood_classes(g);
        Params par = extract_parameters(cp);
        if (par.r1 < 2 || par.t1 < 2) detail::fail("general branch with prime exponent");
        auto [xe, ye] = locate_he(g, cp, par);
        auto counts_q = order_counts_from_side(cp, xe, par.q, par.l);
        auto counts_p = order_counts_from_side(cp, ye, par.p, par.k);
        std::int64_t total_q = 0, total_p = 0;
        for (const auto& [o, c] : counts_q) total_q += c;
        for (const auto& [o, c] : counts_p) total_p += c;
        if (total_q != ipow(par.q, par.m) || total_p != ipow(par.p, par.n))
            detail::fail("order counts do not total the group order");
        std::vector<int> exps_p, exps_q;
        try {
            exps_p = partition_from_order_counts(par.p, counts_p);
            exps_q = partition_from_order_counts(par.q, counts_q);
        } catch (const not_realizable_error& e) {
            detail::fail(std::string("order counts not realizable: ") + e.what());
        }
        GroupSpec spec(SylowSpec(par.p, exps_p), SylowSpec(par.q, exps_q));
        if (!(params_of(spec) == par)) detail::fail("recovered spec contradicts parameters");
        std::ostringstream os;
        os << "params p=" << par.p << " q=" << par.q << " n=" << par.n << " m=" << par.m
           << " k=" << par.k << " l=" << par.l << " r1=" << par.r1 << " t1=" << par.t1;
        rep = ReconstructionReport{Branch::General, par,       counts_p, counts_q,
                                   spec,            {os.str()}, false};
    }

    if (validate) {
        LabeledDiffGraph built = difference_graph(rep->spec);
        if (!are_isomorphic(g, built.graph))
            detail::fail("validation: rebuilt difference graph is not isomorphic");
        rep->validated = true;
        rep->trace.push_back("validated by rebuild + isomorphism");
    }
    return *rep;
}

}  // namespace gdiff
