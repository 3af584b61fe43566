#pragma once

// Brute-force oracles shared by the test suites. These stay independent of
// the library's algorithmic paths: products over all roots, exhaustive
// powering, element-set intersections, direct subspace counting.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ssc/field.hpp"
#include "ssc/linpoly.hpp"
#include "ssc/subspace.hpp"
#include "ssc/tower.hpp"

namespace oracle {

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Multiplicative order by exhaustive powering.
inline std::uint64_t naive_order(const ssc::Field& F, ssc::Elem a) {
    ssc::Elem cur = a;
    std::uint64_t e = 1;
    while (cur != 1) {
        cur = F.mul(cur, a);
        ++e;
    }
    return e;
}

/// The literal product prod_{v in V} (x - v) as an ordinary polynomial.
inline ssc::Poly product_subspace_poly(const ssc::Subspace& V) {
    const ssc::Field& top = V.tower().top();
    ssc::Poly acc = ssc::Poly::one(top);
    for (ssc::Elem v : V.all_elements()) {
        acc = acc * ssc::Poly(top, {top.neg(v), 1});
    }
    return acc;
}

/// Intersection dimension by element-set intersection (q^dim scan).
inline unsigned setwise_intersection_dim(const ssc::Subspace& U, const ssc::Subspace& V) {
    auto ue = U.all_elements();
    std::set<ssc::Elem> us(ue.begin(), ue.end());
    std::uint64_t common = 0;
    for (ssc::Elem e : V.all_elements())
        if (us.count(e)) ++common;
    // common = q^dim(cap)
    const std::uint64_t q = U.tower().q();
    unsigned d = 0;
    std::uint64_t t = 1;
    while (t < common) {
        t *= q;
        ++d;
    }
    REQUIRE(t == common);
    return d;
}

/// Number of roots of f in its field, counted with multiplicity via
/// repeated division by (x - r).
inline std::uint64_t root_count_with_multiplicity(const ssc::Poly& f) {
    const ssc::Field& F = f.field();
    std::uint64_t count = 0;
    for (ssc::Elem r = 0; r < F.size(); ++r) {
        ssc::Poly cur = f;
        ssc::Poly lin(F, {F.neg(r), 1});
        for (;;) {
            auto [q, rem] = ssc::Poly::divmod(cur, lin);
            if (!rem.is_zero()) break;
            ++count;
            cur = q;
            if (cur.deg() < 1) break;
        }
    }
    return count;
}

/// Random nonzero element of the top field.
inline ssc::Elem random_nonzero(const ssc::FieldTower& tw, Rng& rng) {
    for (;;) {
        ssc::Elem a = rng.below(tw.top().size());
        if (a != 0) return a;
    }
}

/// Random subspace of the given dimension (regenerates until dim matches).
inline ssc::Subspace random_subspace(const ssc::FieldTower& tw, unsigned k, Rng& rng) {
    for (;;) {
        std::vector<ssc::Elem> gens;
        for (unsigned i = 0; i < k; ++i) gens.push_back(rng.below(tw.top().size()));
        ssc::Subspace s = ssc::Subspace::from_generators(tw, gens);
        if (s.dim() == k) return s;
    }
}

} // namespace oracle
