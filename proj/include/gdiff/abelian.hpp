// Exact arithmetic for finite abelian groups given as direct products of
// cyclic groups of prime-power order. Everything here is desk-scale and
// definitional: cyclic membership is decided by scanning multiples, never
// by congruence solving.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdiff {

struct group_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct equal_primes_error : group_error {
    using group_error::group_error;
};

struct not_realizable_error : group_error {
    using group_error::group_error;
};

struct internal_mismatch_error : group_error {
    using group_error::group_error;
};

inline bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (std::int64_t{1} << 40)) throw group_error("ipow overflow");
        r *= base;
    }
    return r;
}

// Exact integer logarithm: e with base^e == v, or -1 if v is not a power.
inline int ilog_exact(std::int64_t base, std::int64_t v) {
    if (base < 2 || v < 1) return -1;
    int e = 0;
    std::int64_t r = 1;
    while (r < v) {
        r *= base;
        ++e;
    }
    return r == v ? e : -1;
}

// Smallest prime-power decomposition: v = p^k with p prime, or nullopt-like
// failure signalled by p == 0.
struct PrimePower {
    std::int64_t prime = 0;
    int exp = 0;
};

inline PrimePower prime_power_of(std::int64_t v) {
    if (v < 2) return {};
    std::int64_t p = v;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            p = d;
            break;
        }
    int e = ilog_exact(p, v);
    if (e < 0) return {};
    return {p, e};
}

// One Sylow part: an abelian p-group C_{p^r1} x ... x C_{p^rk} with
// r1 >= r2 >= ... >= rk.
struct SylowSpec {
    std::int64_t prime;
    std::vector<int> exponents;

    SylowSpec(std::int64_t p, std::vector<int> ex)
        : prime(p), exponents(std::move(ex)) {
        if (!is_prime(prime))
            throw group_error("SylowSpec: " + std::to_string(prime) + " is not prime");
        if (exponents.empty())
            throw group_error("SylowSpec: empty exponent list");
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] < 1)
                throw group_error("SylowSpec: exponents must be positive");
            if (i > 0 && exponents[i] > exponents[i - 1])
                throw group_error("SylowSpec: exponents must be non-increasing");
        }
        if (order() > (std::int64_t{1} << 31))
            throw group_error("SylowSpec: order exceeds 2^31");
    }

    int rank() const { return static_cast<int>(exponents.size()); }   // k
    int total() const {                                               // n
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }
    int top() const { return exponents.front(); }                     // r1
    std::int64_t order() const { return ipow(prime, total()); }
    std::int64_t exponent_of_group() const { return ipow(prime, top()); }

    std::vector<std::int64_t> moduli() const {
        std::vector<std::int64_t> m;
        m.reserve(exponents.size());
        for (int e : exponents) m.push_back(ipow(prime, e));
        return m;
    }

    bool operator==(const SylowSpec&) const = default;
    bool operator<(const SylowSpec& o) const {
        if (prime != o.prime) return prime < o.prime;
        return exponents < o.exponents;
    }
};

// Mixed-radix coordinates modulo a fixed list of moduli. Index order is
// lexicographic over the coordinate vector.
struct ResidueSystem {
    std::vector<std::int64_t> mods;
    std::int64_t size = 1;

    ResidueSystem() = default;
    explicit ResidueSystem(std::vector<std::int64_t> m) : mods(std::move(m)) {
        for (std::int64_t v : mods) size *= v;
    }

    std::vector<std::int64_t> coords(std::int64_t idx) const {
        std::vector<std::int64_t> c(mods.size());
        for (std::size_t i = mods.size(); i-- > 0;) {
            c[i] = idx % mods[i];
            idx /= mods[i];
        }
        return c;
    }

    std::int64_t index(const std::vector<std::int64_t>& c) const {
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < mods.size(); ++i) idx = idx * mods[i] + c[i];
        return idx;
    }

    std::vector<std::int64_t> add(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b) const {
        std::vector<std::int64_t> c(mods.size());
        for (std::size_t i = 0; i < mods.size(); ++i) c[i] = (a[i] + b[i]) % mods[i];
        return c;
    }

    std::int64_t order_of(const std::vector<std::int64_t>& c) const {
        std::int64_t ord = 1;
        for (std::size_t i = 0; i < mods.size(); ++i) {
            std::int64_t co = mods[i] / std::gcd(c[i], mods[i]);
            ord = std::lcm(ord, co);
        }
        return ord;
    }
};

// Canonical description of an abelian group with exactly two prime
// divisors: smaller prime first, so spec equality is isomorphism.
struct GroupSpec {
    SylowSpec sylow_a;
    SylowSpec sylow_b;

    GroupSpec(SylowSpec x, SylowSpec y)
        : sylow_a(x.prime < y.prime ? std::move(x) : std::move(y)),
          sylow_b(sylow_a.prime == x.prime ? std::move(y) : std::move(x)) {
        if (sylow_a.prime == sylow_b.prime)
            throw equal_primes_error("GroupSpec: Sylow primes must differ");
        if (sylow_a.order() > (std::int64_t{1} << 31) / sylow_b.order())
            throw group_error("GroupSpec: order exceeds 2^31");
    }

    std::int64_t order() const { return sylow_a.order() * sylow_b.order(); }

    bool operator==(const GroupSpec&) const = default;
    bool operator<(const GroupSpec& o) const {
        if (order() != o.order()) return order() < o.order();
        if (!(sylow_a == o.sylow_a)) return sylow_a < o.sylow_a;
        return sylow_b < o.sylow_b;
    }
};

inline GroupSpec make_group(SylowSpec a, SylowSpec b) {
    return GroupSpec(std::move(a), std::move(b));
}

// An element of a product group, coordinates split per Sylow part.
// The identity is the all-zero element.
struct GroupElement {
    std::vector<std::int64_t> coords_a;
    std::vector<std::int64_t> coords_b;

    bool operator==(const GroupElement&) const = default;

    bool is_identity() const {
        auto zero = [](const std::vector<std::int64_t>& c) {
            return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
        };
        return zero(coords_a) && zero(coords_b);
    }
};

inline void check_shape(const GroupSpec& g, const GroupElement& x) {
    if (x.coords_a.size() != g.sylow_a.exponents.size() ||
        x.coords_b.size() != g.sylow_b.exponents.size())
        throw group_error("element shape does not match group spec");
    auto in_range = [](const std::vector<std::int64_t>& c,
                       const std::vector<std::int64_t>& m) {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] < 0 || c[i] >= m[i]) return false;
        return true;
    };
    if (!in_range(x.coords_a, g.sylow_a.moduli()) ||
        !in_range(x.coords_b, g.sylow_b.moduli()))
        throw group_error("element coordinates out of range");
}

inline std::int64_t order(const GroupSpec& g, const GroupElement& x) {
    check_shape(g, x);
    ResidueSystem ra(g.sylow_a.moduli()), rb(g.sylow_b.moduli());
    return ra.order_of(x.coords_a) * rb.order_of(x.coords_b);
}

// y in <x>, decided by scanning all multiples of x.
inline bool is_in_cyclic(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
    check_shape(g, x);
    check_shape(g, y);
    ResidueSystem ra(g.sylow_a.moduli()), rb(g.sylow_b.moduli());
    std::vector<std::int64_t> ca(x.coords_a.size(), 0), cb(x.coords_b.size(), 0);
    std::int64_t ord = ra.order_of(x.coords_a) * rb.order_of(x.coords_b);
    for (std::int64_t s = 0; s < ord; ++s) {
        if (ca == y.coords_a && cb == y.coords_b) return true;
        ca = ra.add(ca, x.coords_a);
        cb = rb.add(cb, x.coords_b);
    }
    return false;
}

// x ->> y: y is a power of x but x is not a power of y.
inline bool strict_power(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
    return is_in_cyclic(g, x, y) && !is_in_cyclic(g, y, x);
}

// <x,y> is cyclic, decided by explicit closure: the subgroup generated by
// x and y is cyclic iff its cardinality equals lcm(o(x), o(y)).
inline bool generates_cyclic(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
    check_shape(g, x);
    check_shape(g, y);
    ResidueSystem ra(g.sylow_a.moduli()), rb(g.sylow_b.moduli());
    std::int64_t ox = ra.order_of(x.coords_a) * rb.order_of(x.coords_b);
    std::int64_t oy = ra.order_of(y.coords_a) * rb.order_of(y.coords_b);
    std::vector<char> seen(static_cast<std::size_t>(ra.size * rb.size), 0);
    std::int64_t count = 0;
    std::vector<std::int64_t> sa(x.coords_a.size(), 0), sb(x.coords_b.size(), 0);
    for (std::int64_t s = 0; s < ox; ++s) {
        std::vector<std::int64_t> ta = sa, tb = sb;
        for (std::int64_t t = 0; t < oy; ++t) {
            std::int64_t idx = ra.index(ta) * rb.size + rb.index(tb);
            if (!seen[static_cast<std::size_t>(idx)]) {
                seen[static_cast<std::size_t>(idx)] = 1;
                ++count;
            }
            ta = ra.add(ta, y.coords_a);
            tb = rb.add(tb, y.coords_b);
        }
        sa = ra.add(sa, x.coords_a);
        sb = rb.add(sb, x.coords_b);
    }
    return count == std::lcm(ox, oy);
}

// ---- per-Sylow brute-force machinery ----

// All coordinate vectors of a Sylow part, in lexicographic (index) order.
inline std::vector<std::vector<std::int64_t>> sylow_elements(const SylowSpec& s) {
    ResidueSystem rs(s.moduli());
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(rs.size));
    for (std::int64_t i = 0; i < rs.size; ++i) out.push_back(rs.coords(i));
    return out;
}

// Membership matrix within one Sylow part: row x lists all y in <x> as
// element indices. Built by scanning multiples.
inline std::vector<std::vector<char>> sylow_membership(const SylowSpec& s) {
    ResidueSystem rs(s.moduli());
    std::size_t n = static_cast<std::size_t>(rs.size);
    std::vector<std::vector<char>> in_cyc(n, std::vector<char>(n, 0));
    for (std::int64_t x = 0; x < rs.size; ++x) {
        auto cx = rs.coords(x);
        std::int64_t ord = rs.order_of(cx);
        std::vector<std::int64_t> cur(cx.size(), 0);
        for (std::int64_t m = 0; m < ord; ++m) {
            in_cyc[static_cast<std::size_t>(x)][static_cast<std::size_t>(rs.index(cur))] = 1;
            cur = rs.add(cur, cx);
        }
    }
    return in_cyc;
}

// M(K): generators of maximal cyclic subgroups, found by a pairwise scan:
// x is kept unless some z satisfies x in <z> and <z> strictly bigger.
inline std::vector<std::vector<std::int64_t>> maximal_cyclic_generators(const SylowSpec& s) {
    ResidueSystem rs(s.moduli());
    auto in_cyc = sylow_membership(s);
    std::vector<std::vector<std::int64_t>> out;
    for (std::int64_t x = 0; x < rs.size; ++x) {
        bool maximal = true;
        for (std::int64_t z = 0; z < rs.size && maximal; ++z)
            if (in_cyc[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)] &&
                !in_cyc[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)])
                maximal = false;
        if (maximal) out.push_back(rs.coords(x));
    }
    return out;
}

inline std::map<std::int64_t, std::int64_t> order_counts(const SylowSpec& s) {
    ResidueSystem rs(s.moduli());
    std::map<std::int64_t, std::int64_t> counts;
    for (std::int64_t i = 0; i < rs.size; ++i) ++counts[rs.order_of(rs.coords(i))];
    return counts;
}

inline std::map<std::int64_t, std::int64_t> order_counts(const GroupSpec& g) {
    auto ca = order_counts(g.sylow_a);
    auto cb = order_counts(g.sylow_b);
    std::map<std::int64_t, std::int64_t> counts;
    for (const auto& [oa, na] : ca)
        for (const auto& [ob, nb] : cb) counts[oa * ob] += na * nb;
    return counts;
}

// Constructive inverse of order_counts for abelian p-groups, via conjugate
// partitions: with s_j the number of elements of order <= p^j and
// e_j = log_p(s_j), the count of exponents >= j is e_j - e_{j-1}.
inline std::vector<int> partition_from_order_counts(
    std::int64_t p, const std::map<std::int64_t, std::int64_t>& counts) {
    if (!is_prime(p)) throw group_error("partition_from_order_counts: p is not prime");
    auto it1 = counts.find(1);
    if (it1 == counts.end() || it1->second != 1)
        throw not_realizable_error("order counts must contain exactly one identity");
    int max_j = 0;
    for (const auto& [ord, cnt] : counts) {
        if (cnt <= 0) throw not_realizable_error("non-positive order count");
        int j = ilog_exact(p, ord);
        if (j < 0) throw not_realizable_error("order " + std::to_string(ord) +
                                              " is not a power of " + std::to_string(p));
        max_j = std::max(max_j, j);
    }
    std::vector<int> d;  // d[j-1] = #{i : r_i >= j}
    std::int64_t cum = 0;
    int prev_e = 0;
    for (int j = 0; j <= max_j; ++j) {
        auto it = counts.find(ipow(p, j));
        cum += it == counts.end() ? 0 : it->second;
        int e = ilog_exact(p, cum);
        if (e < 0)
            throw not_realizable_error("cumulative count " + std::to_string(cum) +
                                       " is not a power of " + std::to_string(p));
        if (j > 0) {
            d.push_back(e - prev_e);
            if (d.back() < 1 || (d.size() > 1 && d.back() > d[d.size() - 2]))
                throw not_realizable_error("conjugate partition is not non-increasing");
        }
        prev_e = e;
    }
    std::vector<int> exps;
    for (int j = max_j; j >= 1; --j) {
        std::int64_t mult = d[static_cast<std::size_t>(j - 1)] -
                            (j < max_j ? d[static_cast<std::size_t>(j)] : 0);
        for (std::int64_t i = 0; i < mult; ++i) exps.push_back(j);
    }
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    return exps;
}

// Every cyclic subgroup <x> exactly once, each as a sorted list of element
// indices within the part.
inline std::vector<std::vector<std::int64_t>> list_cyclic_subgroups(const SylowSpec& s) {
    ResidueSystem rs(s.moduli());
    auto in_cyc = sylow_membership(s);
    std::vector<std::vector<std::int64_t>> subs;
    for (std::int64_t x = 0; x < rs.size; ++x) {
        std::vector<std::int64_t> members;
        for (std::int64_t y = 0; y < rs.size; ++y)
            if (in_cyc[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])
                members.push_back(y);
        if (std::find(subs.begin(), subs.end(), members) == subs.end())
            subs.push_back(std::move(members));
    }
    std::sort(subs.begin(), subs.end());
    return subs;
}

// ---- enumeration ----

inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(rest, maxpart); v >= 1; --v) {
            cur.push_back(v);
            self(self, rest - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 2; v <= n; ++v)
        if (is_prime(v)) out.push_back(v);
    return out;
}

inline std::vector<SylowSpec> enumerate_sylow_specs(std::int64_t max_order) {
    std::vector<SylowSpec> out;
    for (std::int64_t p : primes_up_to(max_order)) {
        for (int n = 1; ipow(p, n) <= max_order; ++n)
            for (const auto& part : partitions_of(n)) out.emplace_back(p, part);
    }
    std::sort(out.begin(), out.end(), [](const SylowSpec& a, const SylowSpec& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a < b;
    });
    return out;
}

// All canonical two-prime GroupSpecs of order <= max_order, both parts
// nontrivial, in deterministic order.
inline std::vector<GroupSpec> enumerate_specs(std::int64_t max_order) {
    std::vector<GroupSpec> out;
    for (std::int64_t p : primes_up_to(max_order / 2)) {
        for (std::int64_t q : primes_up_to(max_order / p)) {
            if (q <= p) continue;
            for (int n = 1; ipow(p, n) * q <= max_order; ++n)
                for (int m = 1; ipow(p, n) * ipow(q, m) <= max_order; ++m)
                    for (const auto& pa : partitions_of(n))
                        for (const auto& pb : partitions_of(m))
                            out.emplace_back(SylowSpec(p, pa), SylowSpec(q, pb));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gdiff
