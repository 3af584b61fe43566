#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ssc/linpoly.hpp"
#include "ssc/subspace.hpp"

namespace ssc {

/// One cyclic-shift orbit: a representative, the stabilizer subfield degree
/// t ({a : aV = V} + {0} = F_{q^t}) and the orbit size (q^n-1)/(q^t-1).
struct Orbit {
    Subspace rep;
    unsigned stab_degree;
    std::uint64_t size;
};

/// Largest d | gcd(n, k) whose subfield fixes V, tested in decreasing order.
unsigned stabilizer_degree(const Subspace& v);

Orbit make_orbit(const Subspace& v);

/// Visit gamma^j V for j = 0..size-1 (each member exactly once).
void for_each_member(const Orbit& o, const std::function<void(const Subspace&)>& fn);

std::vector<Subspace> materialize_orbit(const Orbit& o, std::uint64_t cap);

/// The serial-least member of the orbit; scans all size shifts (parallel).
Subspace canonical_orbit_key(const Orbit& o);

/// max over nonzero interior coefficient indices s of (q^n-1)/(q^{gcd(s,n)}-1);
/// a lower bound on the number of distinct cyclic shifts. Returns 1 when no
/// interior coefficient is nonzero.
std::uint64_t distinct_shift_bound(const FieldTower& tw, const LinearizedPoly& p);

/// alpha ~_t beta: alpha/beta lies in F_{q^t}. Requires nonzero inputs, t | n.
bool sim_t(const FieldTower& tw, Elem alpha, Elem beta, unsigned t);

/// For a trinomial subspace polynomial x^{q^k} + a1 x^q + a0 x (a1 != 0):
/// if (a0^{(q^k-q)/(q-1)} / a1^{(q^k-1)/(q-1)})^{q^i-1} = 1, returns
/// alpha = (a0/a1)^{(q^i-1)/(q-1)} with F^i(V) = alpha V; otherwise nullopt,
/// certifying that no such alpha exists. Non-trinomial polynomials have no
/// algebraic witness here; use find_shift_mapping for those.
std::optional<Elem> frobenius_cyclic_witness(const FieldTower& tw, const LinearizedPoly& p,
                                             std::uint64_t i);

/// Exhaustive fallback: the gamma-power alpha with alpha*from = to, or
/// nullopt. Scans all q^n - 1 shifts.
std::optional<Elem> find_shift_mapping(const Subspace& from, const Subspace& to);

} // namespace ssc
